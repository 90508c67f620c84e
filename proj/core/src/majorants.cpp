#include "strongmult/majorants.hpp"

#include <cmath>
#include <numbers>

#include "strongmult/errors.hpp"

namespace strongmult {

namespace {

constexpr double kPi = std::numbers::pi;

void check_order(int M) {
  if (M < 1) throw ValidationError("kernel order must be >= 1");
}

void check_delta(double delta) {
  if (!(delta > 0.0) || !(delta < 1.0))
    throw ValidationError("delta must lie in (0, 1)");
}

}  // namespace

double fejer(int M, double x) {
  check_order(M);
  // Reduce to t in [-1/2, 1/2]; the kernel is 1-periodic and even, and both
  // sine factors only change sign under the shift.
  const double t = x - std::nearbyint(x);
  const double s = std::sin(kPi * t);
  if (std::abs(s) < 1e-8) {
    // sin(pi M t)/sin(pi t) -> M (1 - (pi t)^2 (M^2 - 1)/6 + O(t^4))
    const double u = kPi * t;
    const double r = M * (1.0 - u * u * (M * M - 1) / 6.0);
    return r * r / M;
  }
  const double n = std::sin(kPi * M * t);
  return (n * n) / (s * s) / M;
}

double vaaler(int M, double x) {
  check_order(M);
  // 1-periodic; reducing once keeps the high-frequency sine accurate and
  // makes shifted arguments evaluate identically.
  const double xr = x - std::floor(x);
  const int Mp1 = M + 1;
  double acc = 0.0;
  for (int k = 1; k <= M; ++k)
    acc += (static_cast<double>(k) / Mp1 - 0.5) *
           fejer(Mp1, xr - static_cast<double>(k) / Mp1);
  acc /= Mp1;
  acc += std::sin(2 * kPi * Mp1 * xr) / (2 * kPi * Mp1);
  acc -= fejer(Mp1, xr) * std::sin(2 * kPi * xr) / (2 * kPi);
  return acc;
}

double beurling(int M, double x) {
  return vaaler(M, x) + fejer(M + 1, x) / (2.0 * (M + 1));
}

double selberg_plus(double delta, int M, double x) {
  check_order(M);
  check_delta(delta);
  return delta + beurling(M, x - delta) + beurling(M, -x);
}

double default_delta(int M) {
  check_order(M);
  return 1.0 / (kPi * (M + 1));
}

namespace {

// Real part of the n-th Fourier coefficient by the equispaced rectangle rule
// on `nodes` points: exact as long as nodes exceeds degree + n, because every
// aliasing frequency then falls outside the polynomial's spectrum.
double quadrature_coeff(double delta, int M, int n, int nodes) {
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double xj = static_cast<double>(j) / nodes;
    acc += selberg_plus(delta, M, xj) * std::cos(2 * kPi * n * xj);
  }
  return acc / nodes;
}

}  // namespace

SelbergMajorant selberg_fourier(double delta, int M) {
  check_order(M);
  check_delta(delta);
  SelbergMajorant maj;
  maj.delta = delta;
  maj.M = M;
  maj.quadrature_nodes = 4 * (M + 2);
  maj.c.resize(M + 1);
  for (int n = 0; n <= M; ++n)
    maj.c[n] = quadrature_coeff(delta, M, n, maj.quadrature_nodes);
  return maj;
}

double selberg_fourier_coeff(double delta, int M, int n) {
  check_order(M);
  check_delta(delta);
  if (n < 0) throw ValidationError("coefficient index must be >= 0");
  // Enough nodes for indices up to 2M+4 and beyond.
  const int nodes = 4 * (M + 2) + 2 * std::max(0, n - 2 * M - 4);
  return quadrature_coeff(delta, M, n, nodes);
}

double majorant_bound(const SelbergMajorant& maj, double theta) {
  // c[0] + 2 sum c[n] cos(n theta); cosines advance by recurrence.
  const double c1 = std::cos(theta);
  double prev = 1.0, cur = c1;
  double acc = maj.c[0];
  for (int n = 1; n <= maj.M; ++n) {
    acc += 2.0 * maj.c[n] * cur;
    const double next = 2.0 * c1 * cur - prev;
    prev = cur;
    cur = next;
  }
  return acc;
}

double chebyshev_u(int n, double x) {
  if (n < 0) throw ValidationError("polynomial degree must be >= 0");
  if (std::abs(x) > 1.0)
    throw ValidationError("chebyshev_u argument must satisfy |x| <= 1");
  double prev = 1.0;        // U_0
  if (n == 0) return prev;
  double cur = 2.0 * x;     // U_1
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace strongmult
