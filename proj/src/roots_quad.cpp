#include "gpsf/roots_quad.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace gpsf {

namespace {

double prufer_k(const ProlateChannel& ch)
{
    const double a = ch.N + ch.p / 2.0;
    return 0.25 - a * a;
}

double numerator_g(const ProlateChannel& ch, double chi, double r)
{
    return chi - ch.c * ch.c * r * r + prufer_k(ch) / (r * r);
}

struct Eval {
    double f, df;
};

// Bracketed Newton with bisection fallback on [a,b], f(a)f(b) <= 0.
double safe_newton(const std::function<Eval(double)>& phi, double a, double b)
{
    Eval fa = phi(a);
    if (fa.f == 0) return a;
    if (phi(b).f == 0) return b;
    double lo = a, hi = b;
    if (fa.f > 0) std::swap(lo, hi);  // phi(lo) < 0 < phi(hi)
    double x = (a + b) / 2;
    for (int it = 0; it < 200; ++it) {
        const Eval e = phi(x);
        if (e.f == 0) return x;
        if (e.f < 0) lo = x; else hi = x;
        double nx = x - e.f / e.df;
        const double left = std::min(lo, hi), right = std::max(lo, hi);
        if (!(nx > left && nx < right) || !std::isfinite(nx)) nx = (lo + hi) / 2;
        if (std::abs(nx - x) <= 4e-16 * std::max(1.0, std::abs(x)) || std::abs(hi - lo) < 1e-16) return nx;
        x = nx;
    }
    return x;
}

// Plain Newton from x; returns NaN unless it converges inside (lo, hi).
double newton_polish(const std::function<Eval(double)>& phi, double x, double lo, double hi)
{
    for (int it = 0; it < 30; ++it) {
        const Eval e = phi(x);
        if (e.f == 0) return x;
        const double nx = x - e.f / e.df;
        if (!std::isfinite(nx) || nx <= lo || nx >= hi) return std::nan("");
        if (std::abs(nx - x) <= 1e-15 * std::max(1.0, std::abs(x))) return nx;
        x = nx;
    }
    return std::nan("");
}

// All sign changes of phi on a Chebyshev-clustered grid of (a,b), polished.
std::vector<double> scan_roots(const std::function<Eval(double)>& phi, double a, double b, int m)
{
    std::vector<double> grid(m);
    for (int j = 0; j < m; ++j) grid[j] = a + (b - a) * (1 - std::cos(std::numbers::pi * (j + 0.5) / m)) / 2;
    std::vector<double> roots;
    double xp = grid[0], fp = phi(xp).f;
    for (int j = 1; j < m; ++j) {
        const double x = grid[j], f = phi(x).f;
        if (f == 0) {
            roots.push_back(x);
        } else if (fp != 0 && (f > 0) != (fp > 0)) {
            roots.push_back(safe_newton(phi, xp, x));
        }
        xp = x;
        fp = f;
    }
    return roots;
}

}  // namespace

double prufer_q(const ProlateChannel& ch, double chi, double r)
{
    return numerator_g(ch, chi, r) / (1 - r * r);
}

double prufer_dq(const ProlateChannel& ch, double chi, double r)
{
    const double k = prufer_k(ch), c2 = ch.c * ch.c, s = 1 - r * r;
    const double dg = -2 * c2 * r - 2 * k / (r * r * r);
    return dg / s + 2 * r * numerator_g(ch, chi, r) / (s * s);
}

double prufer_dtheta(const ProlateChannel& ch, double chi, double r, double theta)
{
    const double q = prufer_q(ch, chi, r);
    const double a = -2 * r / (1 - r * r);
    return -std::sqrt(q) - (prufer_dq(ch, chi, r) / (4 * q) + a / 2) * std::sin(2 * theta);
}

std::vector<double> find_roots(const ZernikeCoeffs& mode, const RootOptions& opt)
{
    const int n = mode.n;
    if (n == 0) return {};
    const auto& ch = mode.channel;
    const double chi = mode.chi;
    auto phi = [&mode](double r) {
        const PhiValue v = eval_phi_all(mode, r);
        return Eval{v.f, v.df};
    };

    // Step 1: turning point x0 of q on the right of the oscillatory region.
    const double k = prufer_k(ch), c2 = ch.c * ch.c;
    double left = 0;
    if (k < 0) left = std::min(std::pow(-k / c2, 0.25), 1.0);
    double x0 = 1;
    if (left < 1 && numerator_g(ch, chi, 1.0) < 0) {
        double lo = std::max(left, 1e-300), hi = 1;
        if (left == 0) lo = 1e-8;
        for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
            const double mid = (lo + hi) / 2;
            if (numerator_g(ch, chi, mid) > 0) lo = mid; else hi = mid;
        }
        x0 = (lo + hi) / 2;
    }

    auto global = [&]() {
        const auto rs = scan_roots(phi, 0, 1, 40 * (n + 1) + 400);
        if (static_cast<int>(rs.size()) != n)
            throw NumericalError("find_roots: found " + std::to_string(rs.size()) + " roots, expected " +
                                 std::to_string(n));
        return rs;
    };

    // Step 2: largest root.
    const double threshold = opt.mueller_threshold < 0 ? 1 / std::sqrt(ch.c) : opt.mueller_threshold;
    double largest = std::nan("");
    if (chi > threshold) {
        const int m = std::max(5 * n, 20);
        double xp = x0, fp = phi(x0).f;
        for (int j = m - 1; j >= 0; --j) {
            const double x = x0 * (1 - std::cos(std::numbers::pi * (j + 0.5) / m)) / 2;
            const double f = phi(x).f;
            if ((f > 0) != (fp > 0) || f == 0) {
                largest = safe_newton(phi, x, xp);
                break;
            }
            xp = x;
            fp = f;
        }
        if (x0 < 1) {
            // a root beyond the turning point supersedes one found to its left
            const auto right = scan_roots(phi, x0, 1, 4 * n + 40);
            if (!right.empty()) largest = right.back();
        }
    } else {
        double z = std::min(x0, 1 - 1e-6);
        for (int it = 0; it < 3; ++it) {
            const PhiValue v = eval_phi_all(mode, z);
            const double disc = v.df * v.df - 2 * v.f * v.d2f;
            double step;
            if (disc >= 0) {
                const double den = v.df + (v.df >= 0 ? 1 : -1) * std::sqrt(disc);
                step = -2 * v.f / den;
            } else {
                step = -v.f / v.df;
            }
            z = std::clamp(z + step, 1e-12, 1 - 1e-12);
        }
        largest = newton_polish(phi, z, 0, 1);
    }
    if (!std::isfinite(largest)) return global();

    // Steps 3-7: march theta by +pi per root toward smaller r, then polish.
    std::vector<double> roots{largest};
    const double h = std::numbers::pi / opt.rk_steps;
    bool ok = true;
    while (static_cast<int>(roots.size()) < n && ok) {
        double r = roots.back(), theta = std::numbers::pi / 2;
        for (int s = 0; s < opt.rk_steps; ++s) {
            const double k1 = 1 / prufer_dtheta(ch, chi, r, theta);
            const double rm = r + h / 2 * k1;
            if (!(rm > 0 && rm < 1) || prufer_q(ch, chi, rm) <= 0) { ok = false; break; }
            const double k2 = 1 / prufer_dtheta(ch, chi, rm, theta + h / 2);
            r += h * k2;
            theta += h;
            if (!(r > 0 && r < 1) || !std::isfinite(r) || prufer_q(ch, chi, r) <= 0) { ok = false; break; }
        }
        if (!ok) break;
        const double prev = roots.back();
        double root = newton_polish(phi, r, 0, prev);
        if (!std::isfinite(root) || prev - root < 1e-10 * prev) {
            // bracket the sign change nearest the estimate
            const double w = (prev - r) / 2;
            const double a = std::max(r - w, 0.0), b = std::min(r + w, prev - 1e-12 * prev);
            const auto rs = a < b ? scan_roots(phi, a, b, 64) : std::vector<double>{};
            if (rs.empty()) { ok = false; break; }
            root = rs.back();
        }
        roots.push_back(root);
    }
    if (!ok) return global();

    std::sort(roots.begin(), roots.end());
    for (size_t i = 1; i < roots.size(); ++i)
        if (!(roots[i] > roots[i - 1])) return global();
    return roots;
}

std::string to_string(RuleKind k) { return k == RuleKind::Chebyshev ? "chebyshev" : "gaussian"; }

std::vector<double> phi_moments(const std::vector<ZernikeCoeffs>& modes)
{
    std::vector<double> m;
    for (const auto& z : modes) m.push_back(z.coeffs[0] / std::sqrt(z.channel.p + 2.0));
    return m;
}

namespace {

// F(k,i) = Phi_k(r_i) and optionally G(k,i) = Phi_k'(r_i).
void mode_matrix(const std::vector<ZernikeCoeffs>& modes, const std::vector<double>& r, Eigen::MatrixXd& F,
                 Eigen::MatrixXd* G)
{
    const int K = static_cast<int>(modes[0].coeffs.size());
    const int nm = static_cast<int>(modes.size()), nr = static_cast<int>(r.size());
    Eigen::MatrixXd C(nm, K);
    for (int k = 0; k < nm; ++k) C.row(k) = Eigen::Map<const Eigen::RowVectorXd>(modes[k].coeffs.data(), K);
    Eigen::MatrixXd V(K, nr), D(K, nr);
    std::vector<double> v(K), d(K);
    for (int i = 0; i < nr; ++i) {
        zernike_bar_all(modes[0].channel.p, modes[0].channel.N, K, r[i], v.data(), G ? d.data() : nullptr);
        V.col(i) = Eigen::Map<Eigen::VectorXd>(v.data(), K);
        if (G) D.col(i) = Eigen::Map<Eigen::VectorXd>(d.data(), K);
    }
    F = C * V;
    if (G) *G = C * D;
}

double max_discrepancy(const std::vector<ZernikeCoeffs>& modes, const std::vector<double>& moments,
                       const std::vector<double>& r, const std::vector<double>& w)
{
    Eigen::MatrixXd F;
    mode_matrix(modes, r, F, nullptr);
    double worst = 0;
    for (int k = 0; k < F.rows(); ++k) {
        double s = 0;
        for (int i = 0; i < F.cols(); ++i) s += w[i] * F(k, i);
        worst = std::max(worst, std::abs(moments[k] - s));
    }
    return worst;
}

}  // namespace

QuadratureRule1D chebyshev_rule(const ProlateChannel& ch, int n)
{
    validate(ch);
    if (n < 1) throw DomainError("chebyshev_rule: n must be positive");
    if (ch.N != 0) throw DomainError("chebyshev_rule: radial rules use the N = 0 channel");
    const auto modes = solve_channel(ch, n);
    const auto nodes = find_roots(modes[n]);
    std::vector<ZernikeCoeffs> low(modes.begin(), modes.begin() + n);
    const auto moments = phi_moments(low);

    Eigen::MatrixXd F;
    mode_matrix(low, nodes, F, nullptr);
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(moments.data(), n);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(F);
    if (qr.rank() < n) throw NumericalError("chebyshev_rule: collocation matrix is singular");
    Eigen::VectorXd w = qr.solve(rhs);

    QuadratureRule1D rule;
    rule.nodes = nodes;
    rule.weights.assign(w.data(), w.data() + n);
    rule.kind = RuleKind::Chebyshev;
    rule.channel = ch;
    rule.exactness = n - 1;
    rule.discrepancy = max_discrepancy(low, moments, rule.nodes, rule.weights);
    if (!(rule.discrepancy < 1e-8))
        throw NumericalError("chebyshev_rule: weight solve residual " + std::to_string(rule.discrepancy));
    return rule;
}

QuadratureRule1D gaussian_rule(const ProlateChannel& ch, int n, const GaussOptions& opt)
{
    validate(ch);
    if (n < 1) throw DomainError("gaussian_rule: n must be positive");
    if (ch.N != 0) throw DomainError("gaussian_rule: radial rules use the N = 0 channel");
    const QuadratureRule1D start = chebyshev_rule({ch.p, ch.c / 2, 0}, n);
    const auto modes = solve_channel(ch, 2 * n - 1);
    const auto moments = phi_moments(modes);
    const int m = 2 * n;

    std::vector<double> r = start.nodes, w = start.weights;
    auto residual = [&](const std::vector<double>& rr, const std::vector<double>& ww, Eigen::VectorXd& d,
                        Eigen::MatrixXd* J) {
        Eigen::MatrixXd F, G;
        mode_matrix(modes, rr, F, J ? &G : nullptr);
        d.resize(m);
        for (int k = 0; k < m; ++k) {
            double s = 0;
            for (int i = 0; i < n; ++i) s += ww[i] * F(k, i);
            d(k) = moments[k] - s;
        }
        if (J) {
            J->resize(m, m);
            for (int i = 0; i < n; ++i) {
                J->col(i) = -F.col(i);
                J->col(n + i) = -ww[i] * G.col(i);
            }
        }
    };
    auto valid = [](const std::vector<double>& rr) {
        for (size_t i = 0; i < rr.size(); ++i) {
            if (!(rr[i] > 0 && rr[i] < 1)) return false;
            if (i > 0 && !(rr[i] > rr[i - 1])) return false;
        }
        return true;
    };

    Eigen::VectorXd d;
    Eigen::MatrixXd J;
    residual(r, w, d, &J);
    double norm = d.norm();
    for (int it = 0; it < opt.max_iterations && norm > opt.tolerance; ++it) {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(J);
        if (qr.rank() < m) throw NumericalError("gaussian_rule: singular Jacobian");
        const Eigen::VectorXd x = qr.solve(-d);
        double s = 1;
        bool accepted = false;
        for (int h = 0; h <= opt.max_halvings; ++h, s /= 2) {
            std::vector<double> rt(n), wt(n);
            for (int i = 0; i < n; ++i) {
                wt[i] = w[i] + s * x(i);
                rt[i] = r[i] + s * x(n + i);
            }
            if (!valid(rt)) continue;
            Eigen::VectorXd dt;
            residual(rt, wt, dt, nullptr);
            if (dt.norm() < norm) {
                r = rt;
                w = wt;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
        residual(r, w, d, &J);
        norm = d.norm();
    }
    const double scale = std::max(1.0, std::abs(moments[0]));
    if (!(d.lpNorm<Eigen::Infinity>() < 1e-12 * scale))
        throw NumericalError("gaussian_rule: Newton stagnated with residual " + std::to_string(norm));

    QuadratureRule1D rule;
    rule.nodes = r;
    rule.weights = w;
    rule.kind = RuleKind::Gaussian;
    rule.channel = ch;
    rule.exactness = m - 1;
    rule.discrepancy = d.lpNorm<Eigen::Infinity>();
    return rule;
}

std::vector<double> rule_discrepancies(const QuadratureRule1D& rule, int count)
{
    const auto modes = solve_channel({rule.channel.p, rule.channel.c, 0}, count - 1);
    const auto moments = phi_moments(modes);
    Eigen::MatrixXd F;
    mode_matrix(modes, rule.nodes, F, nullptr);
    std::vector<double> d(count);
    for (int k = 0; k < count; ++k) {
        double s = 0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * F(k, i);
        d[k] = moments[k] - s;
    }
    return d;
}

}  // namespace gpsf
