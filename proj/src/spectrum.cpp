#include "gpsf/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace gpsf {

EigenTriple make_triple(const ProlateChannel& ch, int n, double beta)
{
    EigenTriple t;
    t.beta = beta;
    t.mode = {ch.p, ch.N, n};
    t.c = ch.c;
    const double scale = std::pow(2 * std::numbers::pi, ch.p / 2.0 + 1);
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    t.lambda = ipow[ch.N % 4] * (scale * beta);
    t.mu = std::pow(ch.c / (2 * std::numbers::pi), ch.p + 2) * std::norm(t.lambda);
    return t;
}

double beta_direct(const ZernikeCoeffs& mode)
{
    const auto& ch = mode.channel;
    const double a = ch.N + ch.p / 2.0;
    const double eps = std::numeric_limits<double>::epsilon();
    const int K = static_cast<int>(mode.coeffs.size());

    const double num = mode.coeffs[0] *
                       std::exp(ch.N * std::log(ch.c) - a * std::log(2.0) - std::lgamma(a + 1)) /
                       std::sqrt(2.0 * ch.N + ch.p + 2);

    // Stop once past the decay regime and the next term is negligible.
    const int decay_start = static_cast<int>(std::ceil((std::numbers::e * ch.c - ch.N) / 2));
    double den = 0, binom = 1;
    bool converged = false;
    for (int i = 0; i < K; ++i) {
        if (i > 0) binom *= (i + a) / i;
        const double term = mode.coeffs[i] * std::sqrt(2 * (2 * i + a + 1)) * (i % 2 ? -binom : binom);
        if (i > std::max(decay_start, mode.n) && std::abs(term) * 1 < eps * std::abs(den)) {
            converged = true;
            break;
        }
        den += term;
    }
    if (!converged && K > 0 && std::abs(mode.coeffs[K - 1]) * binom > eps * std::abs(den))
        throw NumericalError("beta_direct: denominator series did not converge");
    if (std::abs(den) < 1e-280) throw NumericalError("beta_direct: denominator underflow");
    return num / den;
}

Eigen::MatrixXd rderiv_matrix(int p, int N, int K)
{
    // integrand degree <= 4K + 2N + p; Gauss-Legendre with m nodes is exact to 2m-1
    const int m = 2 * K + N + std::max(p, 0) + 4;
    std::vector<double> x, w;
    gauss_legendre(m, 0, 1, x, w);
    Eigen::MatrixXd V(m, K), W(m, K);
    std::vector<double> val(K), der(K);
    for (int i = 0; i < m; ++i) {
        zernike_bar_all(p, N, K, x[i], val.data(), der.data());
        const double wt = w[i] * std::pow(x[i], p + 1);
        for (int k = 0; k < K; ++k) {
            V(i, k) = wt * val[k];
            W(i, k) = x[i] * der[k];
        }
    }
    Eigen::MatrixXd D = V.transpose() * W;
    for (int k = 0; k < K; ++k)
        for (int j = k + 1; j < K; ++j) D(j, k) = 0;
    return D;
}

std::vector<double> convert_rtprime_projection(const std::vector<double>& x, int N, int p)
{
    const int K = static_cast<int>(x.size());
    if (K == 0) return {};
    const Eigen::MatrixXd D = rderiv_matrix(p, N, K);
    const Eigen::VectorXd y = D * Eigen::Map<const Eigen::VectorXd>(x.data(), K);
    std::vector<double> out(K);
    for (int j = 0; j < K; ++j) out[j] = y(j) + (p + 1) / 2.0 * x[j];
    return out;
}

std::vector<double> convert_rtprime_recurrence(const std::vector<double>& x, int N)
{
    // Columns E_k hold r T'_k in the unnormalized T = r^{1/2} R basis (p = 0).
    const int K = static_cast<int>(x.size());
    if (K == 0) return {};
    auto s = [N](int k) { return std::sqrt(2.0 * (2 * k + N + 1)); };
    std::vector<double> y(K, 0.0), em(K, 0.0), e0(K, 0.0), e1(K, 0.0);
    e0[0] = N + 0.5;
    if (K > 1) {
        e1[0] = 2.0 * (N + 1);
        e1[1] = N + 2.5;
    }
    auto accumulate = [&](const std::vector<double>& e, int k) {
        const double f = x[k] * s(k);
        if (f != 0)
            for (int j = 0; j <= k && j < K; ++j) y[j] += f * e[j];
    };
    accumulate(e0, 0);
    if (K > 1) accumulate(e1, 1);
    for (int n = 1; n + 1 < K; ++n) {
        const double at = 2.0 * (n + N + 1) * (2 * n + N);
        const double bt = 2.0 * N * (2 * n + N + 1);
        const double ct = -2.0 * n * (2 * n + N + 2);
        const double an = (2.0 * N + 4 * n + 5) * (n + N + 1) * (2 * n + N);
        const double m = 2.0 * n + N;
        const double bn = N * (2.0 * n + N + 1) - 2 * m * (m + 1) * (m + 2);
        const double cn = n * (2.0 * N + 4 * n - 1) * (2 * n + N + 2);
        std::vector<double> e2(K, 0.0);
        for (int j = 0; j <= n; ++j) e2[j] = (bt * e1[j] - ct * e0[j]) / at;
        e2[n + 1] += an / at;
        e2[n] -= bn / at;
        e2[n - 1] += cn / at;
        accumulate(e2, n + 1);
        e0.swap(e1);
        e1.swap(e2);
    }
    for (int j = 0; j < K; ++j) y[j] /= s(j);
    return y;
}

std::vector<double> convert_rtprime(const std::vector<double>& x, int N, int p)
{
    if (p == 0) return convert_rtprime_recurrence(x, N);
    return convert_rtprime_projection(x, N, p);
}

double pair_inner(const std::vector<double>& a, const std::vector<double>& b)
{
    const size_t n = std::min(a.size(), b.size());
    double s = 0;
    for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

std::vector<EigenTriple> beta_chain(const std::vector<ZernikeCoeffs>& modes)
{
    std::vector<EigenTriple> out;
    if (modes.empty()) return out;
    const auto& ch = modes[0].channel;
    const int K = static_cast<int>(modes[0].coeffs.size());
    double beta = beta_direct(modes[0]);
    out.push_back(make_triple(ch, 0, beta));
    if (modes.size() == 1) return out;

    // r Phi' for every mode through one projection matrix.
    Eigen::MatrixXd D = rderiv_matrix(ch.p, ch.N, K);
    const bool use_recurrence = ch.p == 0;
    std::vector<double> prev_d = use_recurrence ? convert_rtprime_recurrence(modes[0].coeffs, ch.N)
                                                : std::vector<double>();
    auto apply = [&](const std::vector<double>& a) {
        if (use_recurrence) return convert_rtprime_recurrence(a, ch.N);
        Eigen::VectorXd y = D * Eigen::Map<const Eigen::VectorXd>(a.data(), K);
        return std::vector<double>(y.data(), y.data() + K);
    };
    if (!use_recurrence) prev_d = apply(modes[0].coeffs);

    for (size_t i = 0; i + 1 < modes.size(); ++i) {
        const auto next_d = apply(modes[i + 1].coeffs);
        const double fwd = pair_inner(prev_d, modes[i + 1].coeffs);  // int r Phi_i' Phi_{i+1}
        const double bwd = pair_inner(next_d, modes[i].coeffs);      // int r Phi_{i+1}' Phi_i
        if (std::abs(bwd) < 1e-250 || std::abs(fwd) < 1e-250) break;
        beta *= fwd / bwd;
        out.push_back(make_triple(ch, static_cast<int>(i + 1), beta));
        prev_d = next_d;
    }
    return out;
}

std::vector<EigenTriple> beta_chain(const ProlateChannel& ch, int kmax, const SolveOptions& opt)
{
    return beta_chain(solve_channel(ch, kmax, opt));
}

double mu_sum_closed_form(int p, double c)
{
    const double g = std::tgamma(p / 2.0 + 2);
    return std::pow(c, p + 2) / (std::pow(2.0, p + 2) * g * g);
}

MuSum mu_sum_check(int p, double c, int Nmax, int nmax)
{
    if (p == -1) Nmax = std::min(Nmax, 1);
    double sum = 0;
    for (int N = 0; N <= Nmax; ++N) {
        const auto chain = beta_chain(ProlateChannel{p, c, N}, nmax);
        double s = 0;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) s += it->mu;
        sum += harmonic_dim(p, N) * s;
    }
    return {sum, mu_sum_closed_form(p, c)};
}

BetaDerivative beta_dc(const ZernikeCoeffs& mode, const EigenTriple& triple)
{
    const double f1 = eval_phi(mode, 1.0);
    const int p = mode.channel.p;
    const double c = mode.channel.c;
    return {triple.beta * (f1 * f1 - (p + 2)) / (2 * c), triple.mu / c * f1 * f1};
}

}  // namespace gpsf
