#include "gpsf/io.hpp"

#include <cstdio>
#include <sstream>

namespace gpsf {

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const ZernikeCoeffs& z)
{
    return {{"p", z.channel.p}, {"c", z.channel.c}, {"N", z.channel.N},
            {"n", z.n},         {"chi", z.chi},     {"coeffs", z.coeffs}};
}

ZernikeCoeffs zernike_from_json(const json& j)
{
    ZernikeCoeffs z;
    z.channel = {j.at("p").get<int>(), j.at("c").get<double>(), j.at("N").get<int>()};
    z.n = j.at("n").get<int>();
    z.chi = j.at("chi").get<double>();
    z.coeffs = j.at("coeffs").get<std::vector<double>>();
    return z;
}

json to_json(const std::vector<EigenTriple>& t)
{
    json arr = json::array();
    for (const auto& e : t)
        arr.push_back({{"p", e.mode.p},
                       {"c", e.c},
                       {"N", e.mode.N},
                       {"n", e.mode.n},
                       {"beta", e.beta},
                       {"lambda_re", e.lambda.real()},
                       {"lambda_im", e.lambda.imag()},
                       {"mu", e.mu}});
    return arr;
}

std::string to_csv(const std::vector<EigenTriple>& t)
{
    std::ostringstream os;
    os << "p,c,N,n,beta,lambda_re,lambda_im,abs_lambda,mu\n";
    for (const auto& e : t)
        os << e.mode.p << ',' << fmt17(e.c) << ',' << e.mode.N << ',' << e.mode.n << ',' << fmt17(e.beta) << ','
           << fmt17(e.lambda.real()) << ',' << fmt17(e.lambda.imag()) << ',' << fmt17(std::abs(e.lambda)) << ','
           << fmt17(e.mu) << '\n';
    return os.str();
}

json to_json(const QuadratureRule1D& rule)
{
    return {{"p", rule.channel.p},
            {"c", rule.channel.c},
            {"kind", to_string(rule.kind)},
            {"n", rule.nodes.size()},
            {"exactness", rule.exactness},
            {"discrepancy", rule.discrepancy},
            {"nodes", rule.nodes},
            {"weights", rule.weights}};
}

std::string to_csv(const QuadratureRule1D& rule)
{
    std::ostringstream os;
    os << "node,weight\n";
    for (size_t i = 0; i < rule.nodes.size(); ++i) os << fmt17(rule.nodes[i]) << ',' << fmt17(rule.weights[i]) << '\n';
    return os.str();
}

json to_json(const GpsfExpansion& e)
{
    json modes = json::array();
    for (const auto& t : e.terms)
        modes.push_back({{"N", t.N},
                         {"l", t.l},
                         {"n", t.n},
                         {"re", t.coeff.real()},
                         {"im", t.coeff.imag()},
                         {"reliable", t.reliable}});
    return {{"p", e.p}, {"c", e.c}, {"modes", modes}};
}

GpsfExpansion expansion_from_json(const json& j)
{
    GpsfExpansion e;
    e.p = j.at("p").get<int>();
    e.c = j.at("c").get<double>();
    for (const auto& m : j.at("modes"))
        e.terms.push_back({m.at("N").get<int>(), m.at("l").get<int>(), m.at("n").get<int>(),
                           {m.at("re").get<double>(), m.at("im").get<double>()},
                           m.value("reliable", true)});
    return e;
}

std::string to_csv(const GpsfExpansion& e)
{
    std::ostringstream os;
    os << "N,l,n,re,im,abs,reliable\n";
    for (const auto& t : e.terms)
        os << t.N << ',' << t.l << ',' << t.n << ',' << fmt17(t.coeff.real()) << ',' << fmt17(t.coeff.imag()) << ','
           << fmt17(std::abs(t.coeff)) << ',' << (t.reliable ? 1 : 0) << '\n';
    return os.str();
}

}  // namespace gpsf
