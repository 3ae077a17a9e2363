#pragma once

#include <complex>
#include <map>
#include <vector>

#include "gpsf/ball_quad.hpp"
#include "gpsf/spectrum.hpp"

namespace gpsf {

struct ModeKey {
    int N = 0;
    int l = 1;
    int n = 0;
};

struct GpsfTerm {
    int N = 0;
    int l = 1;
    int n = 0;
    std::complex<double> coeff;
    bool reliable = true;
};

struct GpsfExpansion {
    int p = 0;
    double c = 1;
    std::vector<GpsfTerm> terms;
};

// Solved radial channels for one (p, c), filled on demand.
class ChannelCache {
public:
    ChannelCache(int p, double c) : p_(p), c_(c) {}
    const std::vector<ZernikeCoeffs>& modes(int N, int nmax);
    const std::vector<EigenTriple>& triples(int N, int nmax);
    int p() const { return p_; }
    double c() const { return c_; }

private:
    int p_;
    double c_;
    std::map<int, std::vector<ZernikeCoeffs>> modes_;
    std::map<int, std::vector<EigenTriple>> triples_;
};

enum class AngularSum { Fourier, Direct };

// Samples are f at rule.nodes, in the same order.
GpsfExpansion recover_coeffs(const BallRule& rule, const std::vector<std::complex<double>>& samples,
                             const std::vector<ModeKey>& modes, ChannelCache& cache,
                             AngularSum method = AngularSum::Fourier);

std::complex<double> synthesize(const GpsfExpansion& e, const Point& x, ChannelCache& cache);

double coeff_bound(double sigma_l2, const EigenTriple& triple);

// Every (N, l, n) with N <= Nmax, n <= nmax.
std::vector<ModeKey> mode_grid(int p, int Nmax, int nmax);

// Sampling rule with band limit 2c: Gaussian radial rule sized by the
// N = 0 spectrum at 2c plus 10 modes, angular count from the truncation bound.
BallRule sampling_rule(int p, double c);

}  // namespace gpsf
