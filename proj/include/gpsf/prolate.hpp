#pragma once

#include <vector>

#include "gpsf/special.hpp"

namespace gpsf {

struct ProlateChannel {
    int p = 0;
    double c = 1;
    int N = 0;
};

void validate(const ProlateChannel& ch);

// Row n of the symmetric tridiagonal matrix of L_{N,c} in the Tbar basis:
// a = sub-diagonal (a_0 = 0), b = diagonal, c = super-diagonal.
struct TridiagRow {
    double a, b, c;
};
TridiagRow tridiag_entries(const ProlateChannel& ch, int row);

struct TridiagSym {
    std::vector<double> diag;
    std::vector<double> offdiag;
    int size() const { return static_cast<int>(diag.size()); }
};
TridiagSym build_tridiag(const ProlateChannel& ch, int K);

int choose_truncation(const ProlateChannel& ch, int nmax, double eps);

struct ZernikeCoeffs {
    ProlateChannel channel;
    int n = 0;
    double chi = 0;
    std::vector<double> coeffs;
};

struct SolveOptions {
    double eps = 1e-16;
    // Extra basis functions appended to the decay bound.
    int margin = 10;
    // Run one step of inverse iteration on each returned eigenvector.
    bool refine = false;
};

std::vector<ZernikeCoeffs> solve_channel(const ProlateChannel& ch, int nmax, const SolveOptions& opt = {});

// Rbar_{N,k}(x) and its first two x-derivatives for k = 0..K-1 in one pass.
void zernike_bar_all(int p, int N, int K, double x, double* val, double* der = nullptr, double* der2 = nullptr);

double eval_phi(const ZernikeCoeffs& mode, double r);
double eval_phi_deriv(const ZernikeCoeffs& mode, double r);

struct PhiValue {
    double f, df, d2f;
};
PhiValue eval_phi_all(const ZernikeCoeffs& mode, double r);

// Phi'' from the radial ODE, given Phi and Phi' (r in (0,1)).
double phi_deriv2_ode(const ZernikeCoeffs& mode, double r, double f, double df);

}  // namespace gpsf
