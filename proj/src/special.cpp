#include "gpsf/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace gpsf {

void validate(const RadialModeId& id)
{
    if (id.p < -1) throw DomainError("p must be >= -1");
    if (id.N < 0 || id.n < 0) throw DomainError("N and n must be nonnegative");
    if (id.p == -1 && id.N > 1) throw DomainError("p = -1 admits only N in {0,1}");
}

JacobiCoeffs jacobi_coeffs(double alpha, int n)
{
    const double m = 2.0 * n + alpha;
    return {2.0 * (n + 1) * (n + alpha + 1) * m,
            (m + 1) * alpha * alpha,
            m * (m + 1) * (m + 2),
            2.0 * (n + alpha) * n * (m + 2)};
}

JacobiValue jacobi_eval(double alpha, int n, double x)
{
    if (!(alpha > -1)) throw DomainError("jacobi: alpha must exceed -1");
    if (n < 0) throw DomainError("jacobi: negative degree");
    double p0 = 1, d0 = 0, s0 = 0;
    if (n == 0) return {p0, d0, s0};
    double p1 = (alpha + (alpha + 2) * x) / 2, d1 = (alpha + 2) / 2, s1 = 0;
    for (int k = 1; k < n; ++k) {
        const auto [a1, a2, a3, a4] = jacobi_coeffs(alpha, k);
        const double t = a2 + a3 * x;
        const double p2 = (t * p1 - a4 * p0) / a1;
        const double d2 = (t * d1 - a4 * d0 + a3 * p1) / a1;
        const double s2 = (t * s1 - a4 * s0 + 2 * a3 * d1) / a1;
        p0 = p1; p1 = p2;
        d0 = d1; d1 = d2;
        s0 = s1; s1 = s2;
    }
    return {p1, d1, s1};
}

double jacobi_p(double alpha, int n, double x) { return jacobi_eval(alpha, n, x).p; }

double jacobi_p_deriv(double alpha, int n, double x) { return jacobi_eval(alpha, n, x).dp; }

double zernike_radial(const RadialModeId& id, double x)
{
    validate(id);
    const double a = id.N + id.p / 2.0;
    const double xn = std::pow(x, id.N);
    const double y = 1 - 2 * x * x;
    double r0 = xn;
    if (id.n == 0) return r0;
    double r1 = -xn * (a + (a + 2) * y) / 2;
    for (int k = 1; k < id.n; ++k) {
        const auto [a1, a2, a3, a4] = jacobi_coeffs(a, k);
        const double r2 = -((a2 + a3 * y) * r1 + a4 * r0) / a1;
        r0 = r1;
        r1 = r2;
    }
    return r1;
}

double zernike_norm(const RadialModeId& id)
{
    return std::sqrt(2 * (2 * id.n + id.N + id.p / 2.0 + 1));
}

double zernike_bar(const RadialModeId& id, double x)
{
    validate(id);
    const double a = id.N + id.p / 2.0;
    const double s = (id.n % 2 ? -1.0 : 1.0) * zernike_norm(id);
    return s * std::pow(x, id.N) * jacobi_p(a, id.n, 1 - 2 * x * x);
}

double zernike_bar_xderiv(const RadialModeId& id, double x)
{
    validate(id);
    const double a = id.N + id.p / 2.0;
    const double s = (id.n % 2 ? -1.0 : 1.0) * zernike_norm(id);
    const auto j = jacobi_eval(a, id.n, 1 - 2 * x * x);
    const double xn = std::pow(x, id.N);
    return s * xn * (id.N * j.p - 4 * x * x * j.dp);
}

double tbar(const RadialModeId& id, double r)
{
    return std::pow(r, (id.p + 1) / 2.0) * zernike_bar(id, r);
}

namespace {

double bessel_series(double nu, double x)
{
    const double h = x / 2, q = -h * h;
    double term = std::exp(nu * std::log(h) - std::lgamma(nu + 1));
    if (x == 0) term = nu == 0 ? 1.0 : 0.0;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Miller backward recurrence normalized by
// (x/2)^v0 / Gamma(v0+1) = J_v0 + sum_k (v0+2k) u_k J_{v0+2k}.
double bessel_miller(double nu, double x)
{
    const int top = static_cast<int>(std::floor(nu));
    const double v0 = nu - top;
    int m = static_cast<int>(std::max(nu, x)) + 60 + static_cast<int>(std::sqrt(40.0 * std::max(nu, x)));
    if (m % 2) ++m;

    std::vector<double> u(m / 2 + 2, 0.0);
    u[1] = 1;
    for (int k = 2; k < static_cast<int>(u.size()); ++k) u[k] = u[k - 1] * (v0 + k - 1) / k;

    double jp1 = 0, j = 1e-300, want = 0, norm = 0;
    for (int k = m; k >= 0; --k) {
        if (k == top) want = j;
        if (k % 2 == 0) norm += (k == 0 ? 1.0 : (v0 + k) * u[k / 2]) * j;
        if (k == 0) break;
        const double jm1 = 2 * (v0 + k) / x * j - jp1;
        jp1 = j;
        j = jm1;
        if (std::abs(j) > 1e250) {
            j *= 1e-250; jp1 *= 1e-250; want *= 1e-250; norm *= 1e-250;
        }
    }
    const double lhs = std::exp(v0 * std::log(x / 2) - std::lgamma(v0 + 1));
    return want * lhs / norm;
}

}  // namespace

double bessel_j(double nu, double x)
{
    if (nu < -0.5) throw DomainError("bessel_j: order below -1/2");
    if (x < 0) throw DomainError("bessel_j: negative argument");
    if (nu < 0) {
        // J_{-1/2}(x) = sqrt(2/(pi x)) cos x
        if (x == 0) throw DomainError("bessel_j: J_{-1/2} singular at 0");
        return std::sqrt(2 / (std::numbers::pi * x)) * std::cos(x);
    }
    if (x * x / 4 <= nu + 1) return bessel_series(nu, x);
    return bessel_miller(nu, x);
}

double chi_zero(const RadialModeId& id)
{
    validate(id);
    const double s = id.N + id.p / 2.0 + 2 * id.n;
    return (s + 0.5) * (s + 1.5);
}

double harmonic_dim(int p, int N)
{
    if (N == 0) return 1;
    if (p == -1) return N == 1 ? 1 : 0;
    // (2N+p)(N+p-1)!/(p! N!)
    double b = 1;
    for (int k = 1; k <= p; ++k) b = b * (N + k - 1) / k;
    return std::round((2.0 * N + p) * b / N);
}

double sphere_area(int p)
{
    return 2 * std::pow(std::numbers::pi, p / 2.0 + 1) / std::tgamma(p / 2.0 + 1);
}

double ball_volume(int p)
{
    return std::pow(std::numbers::pi, p / 2.0 + 1) / std::tgamma(p / 2.0 + 2);
}

void gauss_legendre(int m, double a, double b, std::vector<double>& x, std::vector<double>& w)
{
    if (m < 1) throw DomainError("gauss_legendre: need at least one node");
    x.assign(m, 0.0);
    w.assign(m, 0.0);
    const double mid = (a + b) / 2, half = (b - a) / 2;
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5)), dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = z;
            for (int k = 2; k <= m; ++k) {
                const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (m == 1) p0 = 1;
            dp = m * (z * p1 - p0) / (z * z - 1);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double wt = 2 / ((1 - z * z) * dp * dp);
        x[i] = mid - half * z;
        x[m - 1 - i] = mid + half * z;
        w[i] = w[m - 1 - i] = half * wt;
    }
}

}  // namespace gpsf
