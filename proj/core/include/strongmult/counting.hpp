#pragma once

#include <cstdint>
#include <vector>

#include "strongmult/forms.hpp"
#include "strongmult/majorants.hpp"

namespace strongmult {

// Pairwise operations run over the common support: primes unramified for
// both sequences. Every count below is an exact integer decision; no floats
// enter set membership.

// #{p <= x : lambda_1(p)^2 = lambda_2(p)^2}, decided by
// a_1^2 p^(k2-1) = a_2^2 p^(k1-1) in exact integers.
std::uint64_t count_square_equal(const EigenSequence& s1,
                                 const EigenSequence& s2, std::uint64_t x);

struct SplitCounts {
  std::uint64_t n_equal = 0;      // lambda_1 = lambda_2
  std::uint64_t n_flip = 0;       // lambda_1 = -lambda_2
  std::uint64_t n_both_zero = 0;  // a_1 = a_2 = 0 (counted by both of the above)
};

// Sign-resolved refinement: with k2 >= k1 (swap otherwise), lambda_1 = lambda_2
// iff a_1 p^((k2-k1)/2) = a_2. Both weights are even, so the exponent is
// integral.
SplitCounts count_split(const EigenSequence& s1, const EigenSequence& s2,
                        std::uint64_t x);

// sum over common p <= x of U_m1(cos theta_1) U_m2(cos theta_2),
// compensated summation in ascending p.
double sato_tate_sum(const AngleSequence& a1, const AngleSequence& a2, int m1,
                     int m2, std::uint64_t x);

// sum over common p <= x of maj(theta_1 - theta_2') + maj(theta_1 + theta_2')
// where theta_2' = theta_2, or pi - theta_2 when flip is set. Dominates the
// corresponding exact count because each summand dominates the pair of
// interval indicators at the angle differences.
double majorant_count_bound(const AngleSequence& a1, const AngleSequence& a2,
                            const SelbergMajorant& maj, std::uint64_t x,
                            bool flip);

// Same quantity rearranged through the Fourier side:
//   (2 delta + 2/(M+1)) N + 4 sum_n c_n s_n sum_p cos(n theta_1) cos(n theta_2)
// with s_n = (-1)^n when flip is set, else 1. Agrees with the direct
// evaluation to ~1e-6 relative and cross-checks both routes.
double majorant_count_bound_fourier(const AngleSequence& a1,
                                    const AngleSequence& a2,
                                    const SelbergMajorant& maj, std::uint64_t x,
                                    bool flip);

enum class BoundMode { unconditional, grh };

// Reference growth shapes for coincidence counts, reported as ratios only:
//   unconditional: pi(x) log(Q log log x) / sqrt(log log x)
//   grh:           x^(5/6) (log(Q x))^(1/3) / (log x)^(2/3)
// Requires x >= 16 so the iterated logarithm is safely positive.
double bound_shape(double x, double Q, BoundMode mode);

struct SatoTateEntry {
  int m1 = 0;
  int m2 = 0;
  double sum = 0;
};

struct InvariantResult {
  std::string name;
  std::uint64_t x = 0;
  bool pass = false;
  double lhs = 0;
  double rhs = 0;
};

struct CountRow {
  std::uint64_t x = 0;
  std::uint64_t pi_x = 0;  // common unramified primes <= x
  std::uint64_t n_square_equal = 0;
  std::uint64_t n_angle_equal = 0;
  std::uint64_t n_angle_flip = 0;
  std::uint64_t n_both_zero = 0;
  double majorant_rhs_plus = 0;
  double majorant_rhs_minus = 0;
  std::vector<SatoTateEntry> sato_tate;
  double bound_shape_uncond = 0;
  double bound_shape_grh = 0;
};

struct CountParams {
  int M = 10;
  double delta = 0;  // 0 selects default_delta(M)
  int m_max = 4;
};

struct CountReport {
  FormDescriptor f1, f2;
  CountParams params;
  double Q = 0;  // k1 q1 k2 q2
  std::vector<std::uint64_t> x_grid;
  std::vector<CountRow> rows;
  std::vector<InvariantResult> invariants;
  bool all_pass = false;
};

// Aggregates counts, majorant bounds, joint equidistribution sums and shape
// ratios at each cutoff, then checks the pipeline invariants:
//   n_angle_equal + n_angle_flip - n_square_equal = n_both_zero  (exact)
//   n_angle_equal <= majorant_rhs_plus  + 1e-9 pi_x
//   n_angle_flip  <= majorant_rhs_minus + 1e-9 pi_x
//   direct and Fourier-side majorant sums agree to 1e-6 relative.
CountReport build_count_report(const EigenSequence& s1, const EigenSequence& s2,
                               std::vector<std::uint64_t> x_grid,
                               const CountParams& params);

}  // namespace strongmult
