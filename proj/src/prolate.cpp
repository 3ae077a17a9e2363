#include "gpsf/prolate.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gpsf {

void validate(const ProlateChannel& ch)
{
    if (ch.p < -1) throw DomainError("p must be >= -1");
    if (!(ch.c > 0) || !std::isfinite(ch.c)) throw DomainError("c must be positive");
    if (ch.N < 0) throw DomainError("N must be nonnegative");
    if (ch.p == -1 && ch.N > 1) throw DomainError("p = -1 admits only N in {0,1}");
}

namespace {

double offdiag_entry(const ProlateChannel& ch, int n)
{
    const double a = ch.N + ch.p / 2.0, c2 = ch.c * ch.c;
    const double m = 2.0 * n + a;
    return c2 * (n + 1 + a) * (n + 1) / ((m + 2) * std::sqrt(m + 3) * std::sqrt(m + 1));
}

double diag_entry(const ProlateChannel& ch, int n)
{
    const double a = ch.N + ch.p / 2.0, c2 = ch.c * ch.c;
    const double m = 2.0 * n + a;
    const double t = (a == 0) ? 0.0 : a * a / (2 * m * (m + 2));
    return chi_zero({ch.p, ch.N, n}) + c2 / 2 + c2 * t;
}

}  // namespace

TridiagRow tridiag_entries(const ProlateChannel& ch, int row)
{
    validate(ch);
    if (row < 0) throw DomainError("tridiag_entries: negative row");
    return {row == 0 ? 0.0 : offdiag_entry(ch, row - 1), diag_entry(ch, row), offdiag_entry(ch, row)};
}

TridiagSym build_tridiag(const ProlateChannel& ch, int K)
{
    validate(ch);
    TridiagSym t;
    t.diag.resize(K);
    t.offdiag.resize(std::max(K - 1, 0));
    for (int n = 0; n < K; ++n) t.diag[n] = diag_entry(ch, n);
    for (int n = 0; n + 1 < K; ++n) t.offdiag[n] = offdiag_entry(ch, n);
    return t;
}

int choose_truncation(const ProlateChannel& ch, int nmax, double eps)
{
    validate(ch);
    if (!(eps > 0 && eps < 1)) throw DomainError("eps must lie in (0,1)");
    if (nmax < 0) throw DomainError("nmax must be nonnegative");
    const double a = ch.N + ch.p / 2.0;
    const int k1 = std::max(0, static_cast<int>(std::ceil((std::numbers::e * ch.c - ch.N) / 2)));
    // (1/2)^(a+2K+1) < eps
    const int k2 = std::max(0, static_cast<int>(std::ceil((std::log2(1 / eps) - a - 1) / 2)));
    const int margin = 10;
    return std::max(std::max(k1, k2) + margin, nmax + 2 * margin);
}

namespace {

// One inverse-iteration step with (T - shift I) factored by Gaussian
// elimination with partial pivoting (the tridiagonal analogue of dgttrf).
void inverse_iterate(const TridiagSym& t, double shift, std::vector<double>& v)
{
    const int K = t.size();
    std::vector<double> dl(t.offdiag), d(t.diag), du(t.offdiag), du2(K, 0.0);
    std::vector<int> piv(K);
    for (auto& x : d) x -= shift;
    for (int i = 0; i < K; ++i) piv[i] = i;
    for (int i = 0; i + 1 < K; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            const double f = d[i] != 0 ? dl[i] / d[i] : 0.0;
            dl[i] = f;
            d[i + 1] -= f * du[i];
        } else {
            const double f = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = f;
            const double tmp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = tmp - f * d[i + 1];
            if (i + 2 < K) {
                du2[i] = du[i + 1];
                du[i + 1] = -f * du[i + 1];
            }
            piv[i] = i + 1;
        }
    }
    const double tiny = 1e-300;
    for (auto& x : d)
        if (x == 0) x = tiny;
    for (int i = 0; i + 1 < K; ++i) {
        if (piv[i] == i) {
            v[i + 1] -= dl[i] * v[i];
        } else {
            std::swap(v[i], v[i + 1]);
            v[i + 1] -= dl[i] * v[i];
        }
    }
    for (int i = K - 1; i >= 0; --i) {
        double s = v[i];
        if (i + 1 < K) s -= du[i] * v[i + 1];
        if (i + 2 < K) s -= du2[i] * v[i + 2];
        v[i] = s / d[i];
    }
    double nrm = 0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (auto& x : v) x /= nrm;
}

}  // namespace

std::vector<ZernikeCoeffs> solve_channel(const ProlateChannel& ch, int nmax, const SolveOptions& opt)
{
    validate(ch);
    if (nmax < 0) throw DomainError("nmax must be nonnegative");
    const double tail_tol = std::max(opt.eps, 64 * std::numeric_limits<double>::epsilon());
    int K = choose_truncation(ch, nmax, opt.eps) - 10 + opt.margin;
    K = std::max(K, nmax + 2);

    for (int attempt = 0; attempt < 8; ++attempt, K += 20) {
        const TridiagSym t = build_tridiag(ch, K);
        Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(t.diag.data(), K);
        Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(t.offdiag.data(), K - 1);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
        if (es.info() != Eigen::Success)
            throw NumericalError("tridiagonal eigensolver failed for N=" + std::to_string(ch.N) +
                                 " K=" + std::to_string(K));

        std::vector<ZernikeCoeffs> out;
        bool tail_ok = true;
        for (int n = 0; n <= nmax; ++n) {
            ZernikeCoeffs m;
            m.channel = ch;
            m.n = n;
            m.chi = es.eigenvalues()(n);
            m.coeffs.assign(es.eigenvectors().col(n).data(), es.eigenvectors().col(n).data() + K);
            if (opt.refine) inverse_iterate(t, m.chi, m.coeffs);
            double at_one = 0;
            for (int k = 0; k < K; ++k) at_one += m.coeffs[k] * zernike_norm({ch.p, ch.N, k});
            if (at_one < 0)
                for (auto& x : m.coeffs) x = -x;
            if (std::abs(m.coeffs[K - 1]) > tail_tol || std::abs(m.coeffs[K - 2]) > tail_tol) tail_ok = false;
            if (n > 0 && !(m.chi > out.back().chi))
                throw NumericalError("eigenvalues not strictly increasing at n=" + std::to_string(n));
            out.push_back(std::move(m));
        }
        if (tail_ok) return out;
    }
    throw NumericalError("coefficient tail did not decay for N=" + std::to_string(ch.N));
}

void zernike_bar_all(int p, int N, int K, double x, double* val, double* der, double* der2)
{
    const double a = N + p / 2.0, y = 1 - 2 * x * x;
    const double xn = std::pow(x, N);
    const double xn1 = N >= 1 ? std::pow(x, N - 1) : 0.0;
    const double xn2 = N >= 2 ? std::pow(x, N - 2) : 0.0;
    double p0 = 1, d0 = 0, s0 = 0, p1 = 0, d1 = 0, s1 = 0;
    for (int k = 0; k < K; ++k) {
        double P, D, S;
        if (k == 0) {
            P = 1; D = 0; S = 0;
        } else if (k == 1) {
            P = (a + (a + 2) * y) / 2; D = (a + 2) / 2; S = 0;
        } else {
            const auto [a1, a2, a3, a4] = jacobi_coeffs(a, k - 1);
            const double tt = a2 + a3 * y;
            P = (tt * p1 - a4 * p0) / a1;
            D = (tt * d1 - a4 * d0 + a3 * p1) / a1;
            S = (tt * s1 - a4 * s0 + 2 * a3 * d1) / a1;
        }
        p0 = p1; p1 = P;
        d0 = d1; d1 = D;
        s0 = s1; s1 = S;
        const double s = (k % 2 ? -1.0 : 1.0) * std::sqrt(2 * (2 * k + a + 1));
        val[k] = s * xn * P;
        if (der) der[k] = s * (N * xn1 * P - 4 * x * xn * D);
        if (der2)
            der2[k] = s * (N * (N - 1) * xn2 * P - 4 * (2 * N + 1) * xn * D + 16 * x * x * xn * S);
    }
}

PhiValue eval_phi_all(const ZernikeCoeffs& mode, double r)
{
    const int K = static_cast<int>(mode.coeffs.size());
    std::vector<double> v(K), d(K), s(K);
    zernike_bar_all(mode.channel.p, mode.channel.N, K, r, v.data(), d.data(), s.data());
    PhiValue out{0, 0, 0};
    for (int k = K - 1; k >= 0; --k) {
        out.f += mode.coeffs[k] * v[k];
        out.df += mode.coeffs[k] * d[k];
        out.d2f += mode.coeffs[k] * s[k];
    }
    return out;
}

double eval_phi(const ZernikeCoeffs& mode, double r)
{
    const int K = static_cast<int>(mode.coeffs.size());
    std::vector<double> v(K);
    zernike_bar_all(mode.channel.p, mode.channel.N, K, r, v.data());
    double f = 0;
    for (int k = K - 1; k >= 0; --k) f += mode.coeffs[k] * v[k];
    return f;
}

double eval_phi_deriv(const ZernikeCoeffs& mode, double r) { return eval_phi_all(mode, r).df; }

double phi_deriv2_ode(const ZernikeCoeffs& mode, double r, double f, double df)
{
    const int p = mode.channel.p, N = mode.channel.N;
    const double c = mode.channel.c, r2 = r * r;
    const double first = ((p + 1) * r - (p + 3) * r * r2) * df;
    const double zeroth = (mode.chi * r2 - (p + 1) * (p + 3) * r2 / 4 - N * (N + p) - c * c * r2 * r2) * f;
    return -(first + zeroth) / (r2 * (1 - r2));
}

}  // namespace gpsf
