#pragma once

#include <complex>
#include <vector>

#include "gpsf/roots_quad.hpp"

namespace gpsf {

using Point = std::vector<double>;

struct AngularRule {
    int p = 0;
    std::vector<Point> points;
    std::vector<double> weights;
    int degree = 0;
};

AngularRule angular_rule(int p, int K2);
// p = 0 only: m equispaced angles 2 pi j / m (degree m - 1).
AngularRule angular_rule_points(int p, int m);

// Orthonormal real spherical harmonic S_N^l on S^{p+1}, l = 1..h(N).
// p = 0: l = 1 is cos(N theta), l = 2 is sin(N theta).
// p = 1: l = 1..2N+1 maps to order m = l - 1 - N (m < 0 uses sin(|m| phi)).
double spherical_harmonic(int p, int N, int l, const Point& u);

struct BallRule {
    int p = 0;
    QuadratureRule1D radial;
    AngularRule angular;
    std::vector<Point> nodes;
    std::vector<double> weights;
};

// Node index = angular index * radial count + radial index.
BallRule tensor_rule(const QuadratureRule1D& radial, const AngularRule& angular);

std::complex<double> integrate_exponential(const BallRule& rule, const Point& x, double c);

// Exact integral over the unit ball of e^{ic<x,t>}.
double exponential_reference(int p, const Point& x, double c);

double truncation_bound(int p, double c, int K);

// First m with truncation_bound(p, c, ceil(m/2)) < target.
int choose_angular_count(int p, double c, double target);

}  // namespace gpsf
