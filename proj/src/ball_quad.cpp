#include "gpsf/ball_quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gpsf {

namespace {

constexpr double pi = std::numbers::pi;

void check_p(int p)
{
    if (p < -1 || p > 1) throw DomainError("angular rules exist for p in {-1,0,1}");
}

struct Kahan {
    double sum = 0, comp = 0;
    void add(double v)
    {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Orthonormal associated Legendre function on S^2 without the Condon-Shortley phase.
double legendre_bar(int l, int m, double x)
{
    const double s = std::sqrt(std::max(0.0, 1 - x * x));
    double pmm = 1 / std::sqrt(4 * pi);
    for (int k = 1; k <= m; ++k) pmm *= std::sqrt((2.0 * k + 1) / (2.0 * k)) * s;
    if (l == m) return pmm;
    double pm1 = std::sqrt(2.0 * m + 3) * x * pmm;
    if (l == m + 1) return pm1;
    double p0 = pmm;
    for (int ll = m + 2; ll <= l; ++ll) {
        const double a = std::sqrt((4.0 * ll * ll - 1) / (double(ll) * ll - double(m) * m));
        const double b = std::sqrt((double(ll - 1) * (ll - 1) - double(m) * m) / (4.0 * (ll - 1) * (ll - 1) - 1));
        const double p2 = a * (x * pm1 - b * p0);
        p0 = pm1;
        pm1 = p2;
    }
    return pm1;
}

}  // namespace

AngularRule angular_rule_points(int p, int m)
{
    if (p != 0) throw DomainError("angular_rule_points: equispaced angles are the p = 0 rule");
    if (m < 1) throw DomainError("angular_rule_points: need at least one angle");
    AngularRule rule;
    rule.p = 0;
    rule.degree = m - 1;
    for (int j = 0; j < m; ++j) {
        const double t = 2 * pi * j / m;
        rule.points.push_back({std::cos(t), std::sin(t)});
        rule.weights.push_back(2 * pi / m);
    }
    return rule;
}

AngularRule angular_rule(int p, int K2)
{
    check_p(p);
    if (K2 < 0) throw DomainError("angular_rule: K2 must be nonnegative");
    if (p == 0) return angular_rule_points(0, K2 + 1);
    AngularRule rule;
    rule.p = p;
    rule.degree = K2;
    if (p == -1) {
        rule.points = {{-1.0}, {1.0}};
        rule.weights = {1.0, 1.0};
        return rule;
    }
    const int nz = (K2 + 2) / 2, nphi = K2 + 1;
    std::vector<double> z, wz;
    gauss_legendre(nz, -1, 1, z, wz);
    for (int i = 0; i < nz; ++i) {
        const double s = std::sqrt(1 - z[i] * z[i]);
        for (int j = 0; j < nphi; ++j) {
            const double ph = 2 * pi * j / nphi;
            rule.points.push_back({s * std::cos(ph), s * std::sin(ph), z[i]});
            rule.weights.push_back(wz[i] * 2 * pi / nphi);
        }
    }
    return rule;
}

double spherical_harmonic(int p, int N, int l, const Point& u)
{
    check_p(p);
    const int h = static_cast<int>(std::lround(harmonic_dim(p, N)));
    if (N < 0 || l < 1 || l > h) throw DomainError("spherical_harmonic: index out of range");
    if (p == -1) return (N == 0 ? 1.0 : u[0]) / std::sqrt(2.0);
    if (p == 0) {
        if (N == 0) return 1 / std::sqrt(2 * pi);
        const double t = std::atan2(u[1], u[0]);
        return (l == 1 ? std::cos(N * t) : std::sin(N * t)) / std::sqrt(pi);
    }
    const int m = l - 1 - N;
    const double ph = std::atan2(u[1], u[0]);
    const double pl = legendre_bar(N, std::abs(m), std::clamp(u[2], -1.0, 1.0));
    if (m == 0) return pl;
    return std::sqrt(2.0) * pl * (m > 0 ? std::cos(m * ph) : std::sin(-m * ph));
}

BallRule tensor_rule(const QuadratureRule1D& radial, const AngularRule& angular)
{
    if (radial.channel.p != angular.p) throw DomainError("tensor_rule: radial and angular p differ");
    BallRule b;
    b.p = angular.p;
    b.radial = radial;
    b.angular = angular;
    for (size_t i = 0; i < angular.points.size(); ++i) {
        for (size_t j = 0; j < radial.nodes.size(); ++j) {
            Point x = angular.points[i];
            for (auto& v : x) v *= radial.nodes[j];
            b.nodes.push_back(std::move(x));
            b.weights.push_back(angular.weights[i] * radial.weights[j]);
        }
    }
    return b;
}

std::complex<double> integrate_exponential(const BallRule& rule, const Point& x, double c)
{
    Kahan re, im;
    for (size_t k = 0; k < rule.nodes.size(); ++k) {
        double dot = 0;
        for (size_t d = 0; d < x.size(); ++d) dot += x[d] * rule.nodes[k][d];
        re.add(rule.weights[k] * std::cos(c * dot));
        im.add(rule.weights[k] * std::sin(c * dot));
    }
    return {re.sum, im.sum};
}

double exponential_reference(int p, const Point& x, double c)
{
    double r = 0;
    for (double v : x) r += v * v;
    r = std::sqrt(r);
    if (r == 0) return ball_volume(p);
    const double nu = p / 2.0 + 1;
    return std::pow(2 * pi / c, nu) * bessel_j(nu, c * r) / std::pow(r, nu);
}

double truncation_bound(int p, double c, int K)
{
    if (K < 0) throw DomainError("truncation_bound: K must be nonnegative");
    check_p(p);
    const double pre = std::pow(2 * pi, p / 2.0 + 1) * ball_volume(p) / std::sqrt(sphere_area(p));
    double sum = 0;
    for (int N = K + 1; N < K + 2000; ++N) {
        const double h = harmonic_dim(p, N);
        if (h == 0) break;
        const double lt = 2 * N * std::log(c / 2) - p * std::log(2.0) - 2 * std::lgamma(N + p / 2.0 + 1);
        const double term = h * std::exp(lt);
        sum += term;
        if (N > c && term < 1e-20 * sum) break;
    }
    return pre * sum;
}

int choose_angular_count(int p, double c, double target)
{
    for (int m = 1; m < 100000; ++m)
        if (truncation_bound(p, c, (m + 1) / 2) < target) return m;
    throw NumericalError("choose_angular_count: target not reached");
}

}  // namespace gpsf
