#pragma once

#include <vector>

namespace strongmult {

// All four kernels below are 1-periodic trigonometric polynomials evaluated
// pointwise in double precision.

// Fejer kernel of order M: (1/M) (sin(pi M x) / sin(pi x))^2, value M at
// integers; a series fallback keeps the quotient stable near integers.
double fejer(int M, double x);

// Vaaler's degree-(M+1) interpolant of the sawtooth x - floor(x) - 1/2.
double vaaler(int M, double x);

// Beurling's one-sided approximation: vaaler(M, x) + fejer(M+1, x)/(2(M+1)).
double beurling(int M, double x);

// Selberg majorant of the indicator of [0, delta] mod 1:
//   delta + beurling(M, x - delta) + beurling(M, -x)  >=  chi_[0,delta](x).
// Requires delta in (0, 1).
double selberg_plus(double delta, int M, double x);

// Per-period default aperture paired with degree M.
double default_delta(int M);

// Degree-M majorant data: c[n] is the real part of the n-th Fourier
// coefficient of selberg_plus. c[0] = delta + 1/(M+1);
// |c[n]| <= 1/(M+1) + min(delta, 1/(pi n)) for 1 <= n <= M; coefficients
// beyond M vanish (the quadrature is exact for this degree).
struct SelbergMajorant {
  double delta = 0;
  int M = 0;
  int quadrature_nodes = 0;
  std::vector<double> c;  // size M + 1
};

// Equispaced quadrature on 4(M+2) nodes, exact for trigonometric polynomials
// of this degree.
SelbergMajorant selberg_fourier(double delta, int M);

// Single-coefficient probe at arbitrary index n >= 0 (used to confirm that
// coefficients past M vanish).
double selberg_fourier_coeff(double delta, int M, int n);

// Upper bound on (chi(theta/2pi) + chi(-theta/2pi)) / 2 for the interval
// indicator above: c[0] + 2 sum_n c[n] cos(n theta).
double majorant_bound(const SelbergMajorant& maj, double theta);

// U_n(x) by recurrence; requires |x| <= 1.
double chebyshev_u(int n, double x);

}  // namespace strongmult
