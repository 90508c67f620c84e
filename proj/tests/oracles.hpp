#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

// Slow reference implementations, kept deliberately independent of the
// library's algorithms: coefficients by direct product expansion instead of
// theta series and residue lifting, point counts by direct enumeration
// instead of character sums, primality by trial division.

namespace oracles {

// Coefficients c[0..n_max-1] of prod_{n>=1} (1 - q^n)^24 * q, so c[i] is the
// weight-12 eigenvalue at index i+1. Exact integers, expanded term by term
// with binomial factors.
std::vector<mpz_class> tau_product_expansion(std::size_t n_max);

// Frobenius trace at p for y^2 + y = x^3 - x^2 - 10x - 20 by counting affine
// points with an occurrence table over y.
long curve11_trace(std::uint64_t p);

// Frobenius trace at odd p for y^2 = x^3 - x, same method.
long curve32_trace(std::uint64_t p);

// pi(x) by trial division.
std::uint64_t prime_count_trial(std::uint64_t x);

// lambda_1 = lambda_2 decided through exact rationals: both angles carry the
// same sqrt(p) factor, so equality reduces to a_1 / p^((k1-2)/2) equal to
// a_2 / p^((k2-2)/2).
bool lambda_equal(const mpz_class& a1, int k1, const mpz_class& a2, int k2,
                  std::uint64_t p);
bool lambda_flip_equal(const mpz_class& a1, int k1, const mpz_class& a2,
                       int k2, std::uint64_t p);
bool lambda_sq_equal(const mpz_class& a1, int k1, const mpz_class& a2, int k2,
                     std::uint64_t p);

}  // namespace oracles
