#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "strongmult/errors.hpp"

namespace strongmult {

struct FormDescriptor {
  std::string label;
  int weight = 0;           // even, >= 2
  std::uint64_t level = 0;  // >= 1
  bool cm = false;
  std::string source;  // "builtin-delta" | "builtin-e11" | "builtin-cm32" | "file" | "twist"
};

struct PrimeEntry {
  std::uint64_t p;
  mpz_class a;
};

// Integer Hecke eigenvalues a_p at the unramified primes p <= bound, stored
// ascending and complete: every prime p <= bound with p not dividing the level
// has exactly one entry, ramified primes have none, and each entry satisfies
// a_p^2 <= 4 p^(weight-1). All of that is checked here, once, so downstream
// code can rely on it; instances are immutable afterwards.
class EigenSequence {
 public:
  EigenSequence(FormDescriptor desc, std::uint64_t bound,
                std::vector<PrimeEntry> entries);

  const FormDescriptor& descriptor() const { return desc_; }
  std::uint64_t bound() const { return bound_; }
  const std::vector<PrimeEntry>& entries() const { return entries_; }

  // Null when p is ramified or beyond the bound.
  const mpz_class* find(std::uint64_t p) const;

 private:
  FormDescriptor desc_;
  std::uint64_t bound_;
  std::vector<PrimeEntry> entries_;
};

struct AnglePoint {
  std::uint64_t p;
  double lambda;  // a_p / p^((weight-1)/2), in [-2, 2] up to rounding
  double theta;   // acos(lambda / 2), in [0, pi]
};

class AngleSequence {
 public:
  AngleSequence(FormDescriptor desc, std::uint64_t bound,
                std::vector<AnglePoint> points)
      : desc_(std::move(desc)), bound_(bound), points_(std::move(points)) {}

  const FormDescriptor& descriptor() const { return desc_; }
  std::uint64_t bound() const { return bound_; }
  const std::vector<AnglePoint>& points() const { return points_; }

 private:
  FormDescriptor desc_;
  std::uint64_t bound_;
  std::vector<AnglePoint> points_;
};

AngleSequence angles(const EigenSequence& seq);

// True for 1 and for fundamental discriminants: d = 1 mod 4 squarefree, or
// d = 4m with m = 2, 3 mod 4 squarefree. |d| is capped at 10^9.
bool is_fundamental_discriminant(long long d);

// chi_d(p) in {-1, 0, 1} for a fundamental discriminant d.
int kronecker_at_prime(long long d, std::uint64_t p);

// Euler's criterion; a need not be reduced, p an odd prime.
int legendre_symbol(long long a, std::uint64_t p);

// Quadratic twist by a fundamental discriminant. d = +1 or -1 returns the
// sequence unchanged; otherwise primes dividing d are dropped and the rest
// become chi_d(p) * a_p. Weight is unchanged, the level picks up d^2.
EigenSequence twist(const EigenSequence& seq, long long d);

}  // namespace strongmult
