#pragma once

#include <stdexcept>
#include <vector>

namespace gpsf {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Radial mode label: ambient dimension p+2, angular order N, radial index n.
struct RadialModeId {
    int p = 0;
    int N = 0;
    int n = 0;
};

void validate(const RadialModeId& id);

// P_n^{(alpha,0)}(x) and its first two derivatives by the three-term recurrence.
double jacobi_p(double alpha, int n, double x);
double jacobi_p_deriv(double alpha, int n, double x);

struct JacobiValue {
    double p;
    double dp;
    double d2p;
};
JacobiValue jacobi_eval(double alpha, int n, double x);

// Recurrence coefficients a1..a4 of P_{n+1} = ((a2 + a3 x) P_n - a4 P_{n-1}) / a1.
struct JacobiCoeffs {
    double a1, a2, a3, a4;
};
JacobiCoeffs jacobi_coeffs(double alpha, int n);

// Zernike radial polynomial R_{N,n} (Kintner recurrence, R(1) = 1).
double zernike_radial(const RadialModeId& id, double x);
// Normalizing factor sqrt(2(2n+N+p/2+1)) taking R to Rbar.
double zernike_norm(const RadialModeId& id);
double zernike_bar(const RadialModeId& id, double x);
// d/dx Rbar(x) times x.
double zernike_bar_xderiv(const RadialModeId& id, double x);
double tbar(const RadialModeId& id, double r);

double bessel_j(double nu, double x);

double chi_zero(const RadialModeId& id);

// Multiplicity of degree-N spherical harmonics on S^{p+1}.
double harmonic_dim(int p, int N);
// Surface area of S^{p+1} and volume of the unit ball in R^{p+2}.
double sphere_area(int p);
double ball_volume(int p);

// m-point Gauss-Legendre rule on [a,b].
void gauss_legendre(int m, double a, double b, std::vector<double>& x, std::vector<double>& w);

}  // namespace gpsf
