#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gpsf/io.hpp"

using namespace gpsf;

namespace {

struct Common {
    int p = 0;
    double c = 1;
    std::string out;
    std::string format = "csv";
    double eps = 1e-16;
    int threads = 1;
};

void add_common(CLI::App* sub, Common& o)
{
    sub->add_option("--p", o.p, "dimension parameter (ambient dimension p+2)");
    sub->add_option("--c", o.c, "band limit")->required();
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--eps", o.eps, "coefficient tail tolerance");
    sub->add_option("--threads", o.threads, "worker cap (computations are sequential)");
}

void emit(const Common& o, const std::string& csv, const json& js)
{
    const std::string text = o.format == "json" ? js.dump(2) + "\n" : csv;
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw DomainError("cannot open output file " + o.out);
    f << text;
}

std::vector<double> parse_list(const std::string& s)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw DomainError("bad number in list: " + item);
        }
    }
    return v;
}

QuadratureRule1D radial_rule(const std::string& spec, int p, double c)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw DomainError("--radial expects kind:count, e.g. cheb:14");
    const std::string kind = spec.substr(0, colon);
    int n = 0;
    try {
        n = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw DomainError("--radial count is not an integer");
    }
    if (kind == "cheb") return chebyshev_rule({p, c, 0}, n);
    if (kind == "gauss") return gaussian_rule({p, c, 0}, n);
    throw DomainError("--radial kind must be cheb or gauss");
}

AngularRule make_angular(int p, int count)
{
    // p = 0: number of equispaced angles; p = 1: harmonic degree; p = -1: ignored
    if (p == 0) return angular_rule_points(0, count);
    return angular_rule(p, count);
}

Point parse_point(const std::string& s, int p)
{
    Point x = parse_list(s);
    if (static_cast<int>(x.size()) != p + 2) throw DomainError("--x must have p+2 components");
    return x;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized prolate spheroidal functions on the unit ball"};
    app.require_subcommand(1);
    Common o;

    int N = 0, n = 0, nmax = 10, Nmax = -1, grid = 11, angular = -1, kmax = -1;
    std::string xs, radial, Ns, samples_path, method = "chain";

    auto* eval = app.add_subcommand("eval", "evaluate Phi_{N,n} and its derivative on a grid");
    add_common(eval, o);
    eval->add_option("--N", N);
    eval->add_option("--n", n);
    eval->add_option("--grid", grid, "number of equispaced points on [0,1]");

    auto* eigs = app.add_subcommand("eigs", "eigenvalues beta, lambda, mu of one channel");
    add_common(eigs, o);
    eigs->add_option("--N", N);
    eigs->add_option("--nmax", nmax);
    eigs->add_option("--method", method)->check(CLI::IsMember({"chain", "direct"}));

    auto* roots = app.add_subcommand("roots", "roots of Phi_{N,n}");
    add_common(roots, o);
    roots->add_option("--N", N);
    roots->add_option("--n", n)->required();

    auto* qcheb = app.add_subcommand("quad-cheb", "radial Chebyshev rule");
    add_common(qcheb, o);
    qcheb->add_option("--n", n)->required();

    auto* qgauss = app.add_subcommand("quad-gauss", "radial Gaussian rule");
    add_common(qgauss, o);
    qgauss->add_option("--n", n)->required();

    auto* ball = app.add_subcommand("ball-integrate", "integrate exp(ic<x,t>) over the unit ball");
    add_common(ball, o);
    ball->add_option("--x", xs)->required();
    ball->add_option("--radial", radial, "cheb:count or gauss:count")->required();
    ball->add_option("--angular", angular, "angle count (p=0) or harmonic degree (p=1)");

    auto* interp = app.add_subcommand("interp", "recover expansion coefficients of exp(ic<x,t>)");
    add_common(interp, o);
    interp->add_option("--x", xs)->required();
    interp->add_option("--N", Ns, "comma-separated channels (default 0..Nmax)");
    interp->add_option("--Nmax", Nmax);
    interp->add_option("--nmax", nmax);
    interp->add_option("--radial", radial, "radial rule at band limit 2c, kind:count");
    interp->add_option("--angular", angular);
    interp->add_option("--samples", samples_path, "CSV of f at the rule nodes: coords..., f_re, f_im");

    auto* spec = app.add_subcommand("spectrum-check", "sum of h(N) mu_{N,n} against the closed form");
    add_common(spec, o);
    spec->add_option("--Nmax", Nmax);
    spec->add_option("--nmax", kmax);

    auto* fig = app.add_subcommand("figure-data", "|lambda_{N,n}| sequences for several channels");
    add_common(fig, o);
    fig->add_option("--N", Ns)->required();
    fig->add_option("--nmax", nmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (o.p < -1) throw DomainError("--p must be >= -1");
        if (!(o.c > 0)) throw DomainError("--c must be positive");
        if (!(o.eps > 0 && o.eps < 1)) throw DomainError("--eps must lie in (0,1)");
        if (o.threads < 1) throw DomainError("--threads must be positive");
        SolveOptions sopt;
        sopt.eps = o.eps;

        if (*eval) {
            if (n < 0 || grid < 2) throw DomainError("need n >= 0 and grid >= 2");
            const auto modes = solve_channel({o.p, o.c, N}, n, sopt);
            const auto& m = modes[n];
            std::ostringstream csv;
            csv << "r,phi,dphi\n";
            json vals = json::array();
            for (int i = 0; i < grid; ++i) {
                const double r = static_cast<double>(i) / (grid - 1);
                const PhiValue v = eval_phi_all(m, r);
                csv << fmt17(r) << ',' << fmt17(v.f) << ',' << fmt17(v.df) << '\n';
                vals.push_back({r, v.f, v.df});
            }
            json js = to_json(m);
            js["values"] = vals;
            emit(o, csv.str(), js);
        } else if (*eigs) {
            if (nmax < 0) throw DomainError("--nmax must be nonnegative");
            std::vector<EigenTriple> t;
            if (method == "chain") {
                t = beta_chain({o.p, o.c, N}, nmax, sopt);
            } else {
                for (const auto& m : solve_channel({o.p, o.c, N}, nmax, sopt))
                    t.push_back(make_triple(m.channel, m.n, beta_direct(m)));
            }
            emit(o, to_csv(t), to_json(t));
        } else if (*roots) {
            if (n < 0) throw DomainError("--n must be nonnegative");
            const auto modes = solve_channel({o.p, o.c, N}, n, sopt);
            const auto rs = find_roots(modes[n]);
            std::ostringstream csv;
            csv << "index,root\n";
            for (size_t i = 0; i < rs.size(); ++i) csv << i << ',' << fmt17(rs[i]) << '\n';
            emit(o, csv.str(), json{{"p", o.p}, {"c", o.c}, {"N", N}, {"n", n}, {"roots", rs}});
        } else if (*qcheb || *qgauss) {
            const auto rule = *qcheb ? chebyshev_rule({o.p, o.c, 0}, n) : gaussian_rule({o.p, o.c, 0}, n);
            emit(o, to_csv(rule), to_json(rule));
        } else if (*ball) {
            const Point x = parse_point(xs, o.p);
            const auto rad = radial_rule(radial, o.p, o.c);
            const int count = angular > 0 ? angular : choose_angular_count(o.p, o.c, 1e-16);
            const auto rule = tensor_rule(rad, make_angular(o.p, count));
            const auto v = integrate_exponential(rule, x, o.c);
            const double ref = exponential_reference(o.p, x, o.c);
            const double rel = std::abs(v - ref) / std::abs(ref);
            std::ostringstream csv;
            csv << "value_re,value_im,reference,rel_err\n"
                << fmt17(v.real()) << ',' << fmt17(v.imag()) << ',' << fmt17(ref) << ',' << fmt17(rel) << '\n';
            emit(o, csv.str(),
                 json{{"value_re", v.real()}, {"value_im", v.imag()}, {"reference", ref}, {"rel_err_vs_reference", rel},
                      {"nodes", rule.nodes.size()}});
        } else if (*interp) {
            const Point x = parse_point(xs, o.p);
            BallRule rule;
            if (!radial.empty()) {
                const auto rad = radial_rule(radial, o.p, 2 * o.c);
                const int count = angular > 0 ? angular : choose_angular_count(o.p, 2 * o.c, 1e-16);
                rule = tensor_rule(rad, make_angular(o.p, count));
            } else {
                rule = sampling_rule(o.p, o.c);
            }
            std::vector<std::complex<double>> f(rule.nodes.size());
            if (samples_path.empty()) {
                for (size_t k = 0; k < f.size(); ++k) {
                    double dot = 0;
                    for (size_t d = 0; d < x.size(); ++d) dot += x[d] * rule.nodes[k][d];
                    f[k] = std::polar(1.0, o.c * dot);
                }
            } else {
                std::ifstream in(samples_path);
                if (!in) throw DomainError("cannot read " + samples_path);
                std::string line;
                size_t k = 0;
                while (std::getline(in, line)) {
                    if (line.empty() || !(std::isdigit(line[0]) || line[0] == '-' || line[0] == '.')) continue;
                    const auto v = parse_list(line);
                    if (static_cast<int>(v.size()) != o.p + 4) throw DomainError("sample row needs p+4 columns");
                    if (k >= f.size()) throw DomainError("more samples than rule nodes");
                    f[k++] = {v[v.size() - 2], v[v.size() - 1]};
                }
                if (k != f.size()) throw DomainError("fewer samples than rule nodes");
            }
            std::vector<ModeKey> keys;
            if (!Ns.empty()) {
                for (double v : parse_list(Ns)) {
                    const int NN = static_cast<int>(v);
                    const int h = static_cast<int>(std::lround(harmonic_dim(o.p, NN)));
                    for (int l = 1; l <= h; ++l)
                        for (int k = 0; k <= nmax; ++k) keys.push_back({NN, l, k});
                }
            } else {
                keys = mode_grid(o.p, Nmax >= 0 ? Nmax : static_cast<int>(o.c), nmax);
            }
            ChannelCache cache(o.p, o.c);
            const auto e = recover_coeffs(rule, f, keys, cache);
            emit(o, to_csv(e), to_json(e));
        } else if (*spec) {
            const int big = static_cast<int>(std::ceil(o.c)) + 40;
            const auto s = mu_sum_check(o.p, o.c, Nmax >= 0 ? Nmax : big, kmax >= 0 ? kmax : big);
            std::ostringstream csv;
            csv << "partial_sum,closed_form,ratio\n"
                << fmt17(s.partial_sum) << ',' << fmt17(s.closed_form) << ',' << fmt17(s.partial_sum / s.closed_form)
                << '\n';
            emit(o, csv.str(), json{{"partial_sum", s.partial_sum}, {"closed_form", s.closed_form}});
        } else if (*fig) {
            std::ostringstream csv;
            csv << "p,c,N,i,abs_lambda\n";
            json arr = json::array();
            for (double v : parse_list(Ns)) {
                const int NN = static_cast<int>(v);
                for (const auto& t : beta_chain({o.p, o.c, NN}, nmax, sopt)) {
                    csv << o.p << ',' << fmt17(o.c) << ',' << NN << ',' << t.mode.n + 1 << ','
                        << fmt17(std::abs(t.lambda)) << '\n';
                    arr.push_back({{"N", NN}, {"i", t.mode.n + 1}, {"abs_lambda", std::abs(t.lambda)}});
                }
            }
            emit(o, csv.str(), json{{"p", o.p}, {"c", o.c}, {"points", arr}});
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
