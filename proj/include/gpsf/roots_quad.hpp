#pragma once

#include <string>
#include <vector>

#include "gpsf/prolate.hpp"

namespace gpsf {

struct PruferState {
    double theta;
    double r;
    double chi;
    ProlateChannel channel;
};

// Coefficient q(r) of phi'' + a(r) phi' + q(r) phi = 0 for phi = r^{(p+1)/2} Phi,
// its derivative, and dtheta/dr of the Prufer phase.
double prufer_q(const ProlateChannel& ch, double chi, double r);
double prufer_dq(const ProlateChannel& ch, double chi, double r);
double prufer_dtheta(const ProlateChannel& ch, double chi, double r, double theta);

struct RootOptions {
    // Alg. 2500 Step 2 branch: sign scan when chi > threshold, Mueller otherwise.
    // Negative means 1/sqrt(c).
    double mueller_threshold = -1;
    int rk_steps = 100;
};

std::vector<double> find_roots(const ZernikeCoeffs& mode, const RootOptions& opt = {});

enum class RuleKind { Chebyshev, Gaussian };

struct QuadratureRule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    RuleKind kind = RuleKind::Chebyshev;
    ProlateChannel channel;
    int exactness = 0;
    // max_k |int Phi_k x^{p+1} - sum w Phi_k(r_i)| over the exactness range
    double discrepancy = 0;
};

std::string to_string(RuleKind k);

// int_0^1 Phi_{0,k} x^{p+1} dx for each mode.
std::vector<double> phi_moments(const std::vector<ZernikeCoeffs>& modes);

QuadratureRule1D chebyshev_rule(const ProlateChannel& ch, int n);

struct GaussOptions {
    int max_iterations = 60;
    int max_halvings = 40;
    double tolerance = 1e-15;
};

QuadratureRule1D gaussian_rule(const ProlateChannel& ch, int n, const GaussOptions& opt = {});

// Discrepancies d_k = int Phi_{0,k} x^{p+1} - sum_i w_i Phi_{0,k}(r_i), k < count.
std::vector<double> rule_discrepancies(const QuadratureRule1D& rule, int count);

}  // namespace gpsf
