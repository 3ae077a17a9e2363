#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gpsf/prolate.hpp"

namespace gpsf {

struct EigenTriple {
    double beta = 0;
    std::complex<double> lambda;
    double mu = 0;
    RadialModeId mode;
    double c = 0;
};

EigenTriple make_triple(const ProlateChannel& ch, int n, double beta);

// beta_{N,n} from the leading Zernike coefficient and the alternating series.
double beta_direct(const ZernikeCoeffs& mode);

// D(j,k) = int Rbar_j * x Rbar_k' * x^{p+1} dx, exact; upper triangular.
Eigen::MatrixXd rderiv_matrix(int p, int N, int K);

// Coefficients of sum_i x_i r Tbar'_{N,i}(r) in the Tbar_{N,.} basis.
std::vector<double> convert_rtprime(const std::vector<double>& x, int N, int p);
std::vector<double> convert_rtprime_projection(const std::vector<double>& x, int N, int p);
// Forward elimination with the three-term derivative identity; p = 0 only.
std::vector<double> convert_rtprime_recurrence(const std::vector<double>& x, int N);

double pair_inner(const std::vector<double>& a, const std::vector<double>& b);

// beta_{N,0..kmax} by the ratio chain. A result shorter than kmax+1 means
// the chain was stopped because an integral underflowed.
std::vector<EigenTriple> beta_chain(const ProlateChannel& ch, int kmax, const SolveOptions& opt = {});
std::vector<EigenTriple> beta_chain(const std::vector<ZernikeCoeffs>& modes);

struct MuSum {
    double partial_sum;
    double closed_form;
};
MuSum mu_sum_check(int p, double c, int Nmax, int nmax);
double mu_sum_closed_form(int p, double c);

struct BetaDerivative {
    double dbeta_dc;
    double dmu_dc;
};
BetaDerivative beta_dc(const ZernikeCoeffs& mode, const EigenTriple& triple);

}  // namespace gpsf
