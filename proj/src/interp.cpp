#include "gpsf/interp.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <numbers>

namespace gpsf {

const std::vector<ZernikeCoeffs>& ChannelCache::modes(int N, int nmax)
{
    auto it = modes_.find(N);
    if (it == modes_.end() || static_cast<int>(it->second.size()) <= nmax) {
        modes_[N] = solve_channel(ProlateChannel{p_, c_, N}, nmax);
        triples_.erase(N);
    }
    return modes_[N];
}

const std::vector<EigenTriple>& ChannelCache::triples(int N, int nmax)
{
    const auto& m = modes(N, nmax);
    auto it = triples_.find(N);
    if (it == triples_.end()) it = triples_.emplace(N, beta_chain(m)).first;
    return it->second;
}

namespace {

constexpr double pi = std::numbers::pi;

struct FftwPlan {
    int m;
    fftw_complex* in;
    fftw_complex* out;
    fftw_plan plan;
    explicit FftwPlan(int size) : m(size)
    {
        in = fftw_alloc_complex(m);
        out = fftw_alloc_complex(m);
        plan = fftw_plan_dft_1d(m, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    ~FftwPlan()
    {
        fftw_destroy_plan(plan);
        fftw_free(in);
        fftw_free(out);
    }
    FftwPlan(const FftwPlan&) = delete;
    FftwPlan& operator=(const FftwPlan&) = delete;
};

}  // namespace

GpsfExpansion recover_coeffs(const BallRule& rule, const std::vector<std::complex<double>>& samples,
                             const std::vector<ModeKey>& modes, ChannelCache& cache, AngularSum method)
{
    const int p = cache.p();
    const double c = cache.c();
    if (rule.p != p) throw DomainError("recover_coeffs: rule dimension differs from channel dimension");
    if (std::abs(rule.radial.channel.c - 2 * c) > 1e-12 * c)
        throw DomainError("recover_coeffs: sampling rule band limit must be 2c");
    if (samples.size() != rule.nodes.size()) throw DomainError("recover_coeffs: sample count mismatch");
    if (method == AngularSum::Fourier && p != 0) method = AngularSum::Direct;

    const int nr = static_cast<int>(rule.radial.nodes.size());
    const int na = static_cast<int>(rule.angular.points.size());

    int Nmax = 0;
    std::map<int, int> nmax;
    for (const auto& k : modes) {
        if (k.N > rule.angular.degree) throw DomainError("recover_coeffs: N exceeds the angular rule degree");
        spherical_harmonic(p, k.N, k.l, rule.angular.points[0]);  // validates l
        Nmax = std::max(Nmax, k.N);
        nmax[k.N] = std::max(nmax[k.N], k.n);
    }

    // A[(N,l)][j] = sum_i v_i f(r_j x_i) S_N^l(x_i)
    std::map<std::pair<int, int>, std::vector<std::complex<double>>> ang;
    for (const auto& k : modes) ang[{k.N, k.l}].assign(nr, 0.0);

    if (method == AngularSum::Fourier) {
        FftwPlan fft(na);
        const double v = rule.angular.weights[0];
        for (int j = 0; j < nr; ++j) {
            for (int i = 0; i < na; ++i) {
                fft.in[i][0] = samples[i * nr + j].real();
                fft.in[i][1] = samples[i * nr + j].imag();
            }
            fftw_execute(fft.plan);
            for (auto& [key, vals] : ang) {
                const auto [N, l] = key;
                const std::complex<double> gp(fft.out[N % na][0], fft.out[N % na][1]);
                const int mN = (na - N % na) % na;
                const std::complex<double> gm(fft.out[mN][0], fft.out[mN][1]);
                std::complex<double> s;
                if (N == 0) s = gp / std::sqrt(2 * pi);
                else if (l == 1) s = (gp + gm) / 2.0 / std::sqrt(pi);
                else s = (gm - gp) / std::complex<double>(0, 2) / std::sqrt(pi);
                vals[j] = v * s;
            }
        }
    } else {
        for (auto& [key, vals] : ang) {
            const auto [N, l] = key;
            std::vector<double> sv(na);
            for (int i = 0; i < na; ++i) sv[i] = spherical_harmonic(p, N, l, rule.angular.points[i]);
            for (int j = 0; j < nr; ++j) {
                std::complex<double> s = 0;
                for (int i = 0; i < na; ++i) s += rule.angular.weights[i] * sv[i] * samples[i * nr + j];
                vals[j] = s;
            }
        }
    }

    GpsfExpansion out;
    out.p = p;
    out.c = c;
    const double floor = 1e-3 * std::numeric_limits<double>::epsilon();
    for (const auto& k : modes) {
        const auto& ms = cache.modes(k.N, nmax[k.N]);
        const auto& tr = cache.triples(k.N, nmax[k.N]);
        const auto& vals = ang[{k.N, k.l}];
        std::complex<double> a = 0;
        for (int j = 0; j < nr; ++j)
            a += rule.radial.weights[j] * eval_phi(ms[k.n], rule.radial.nodes[j]) * vals[j];
        GpsfTerm t{k.N, k.l, k.n, a, true};
        t.reliable = k.n < static_cast<int>(tr.size()) && std::abs(tr[k.n].lambda) >= floor;
        out.terms.push_back(t);
    }
    return out;
}

std::complex<double> synthesize(const GpsfExpansion& e, const Point& x, ChannelCache& cache)
{
    double r = 0;
    for (double v : x) r += v * v;
    r = std::sqrt(r);
    if (r > 1 + 1e-14) throw DomainError("synthesize: point outside the unit ball");
    Point u = x;
    if (r == 0) {
        u.assign(x.size(), 0.0);
        u[0] = 1;
    } else {
        for (auto& v : u) v /= r;
    }
    std::map<int, int> nmax;
    for (const auto& t : e.terms) nmax[t.N] = std::max(nmax[t.N], t.n);
    std::complex<double> s = 0;
    for (const auto& t : e.terms) {
        const auto& ms = cache.modes(t.N, nmax[t.N]);
        s += t.coeff * eval_phi(ms[t.n], std::min(r, 1.0)) * spherical_harmonic(e.p, t.N, t.l, u);
    }
    return s;
}

double coeff_bound(double sigma_l2, const EigenTriple& triple)
{
    if (sigma_l2 < 0) throw DomainError("coeff_bound: negative norm");
    return std::abs(triple.lambda) * sigma_l2;
}

std::vector<ModeKey> mode_grid(int p, int Nmax, int nmax)
{
    std::vector<ModeKey> out;
    if (p == -1) Nmax = std::min(Nmax, 1);
    for (int N = 0; N <= Nmax; ++N) {
        const int h = static_cast<int>(std::lround(harmonic_dim(p, N)));
        for (int l = 1; l <= h; ++l)
            for (int n = 0; n <= nmax; ++n) out.push_back({N, l, n});
    }
    return out;
}

BallRule sampling_rule(int p, double c)
{
    const double c2 = 2 * c;
    const auto chain = beta_chain(ProlateChannel{p, c2, 0}, static_cast<int>(c2) + 40);
    int count = 0;
    for (const auto& t : chain)
        if (t.mu > 1e-32) ++count;
    const int n = (count + 10 + 1) / 2;
    const QuadratureRule1D radial = gaussian_rule({p, c2, 0}, n);
    AngularRule angular;
    if (p == 0) angular = angular_rule_points(0, choose_angular_count(0, c2, 1e-16));
    else angular = angular_rule(p, choose_angular_count(p, c2, 1e-16));
    return tensor_rule(radial, angular);
}

}  // namespace gpsf
