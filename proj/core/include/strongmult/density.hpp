#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "strongmult/forms.hpp"

namespace strongmult {

// Prime sets whose lower Dirichlet density the estimates target. Membership
// is always decided in exact integer arithmetic on the stored a_p.
enum class SetKind {
  alpha,       // lambda_1 != e^{i alpha} lambda_2
  abs,         // |lambda_1| != |lambda_2|
  square_sum,  // |lambda_1|^2 + |lambda_2|^2 != 2
  adjoint,     // adjoint coefficients differ; identical membership test to abs
};

struct SetSelector {
  SetKind kind = SetKind::abs;
  double alpha = 0;  // reduced mod 2pi; only meaningful for SetKind::alpha
};

SetSelector make_selector(SetKind kind, double alpha = 0);

const char* set_kind_name(SetKind kind);

// Member primes <= x, ascending, over the common support. For SetKind::alpha
// the reduced angle 0 tests lambda_1 != lambda_2, the reduced angle pi tests
// lambda_1 != -lambda_2, and any other angle admits every prime except those
// with a_1 = a_2 = 0 (real data cannot match a strictly complex rotation).
std::vector<std::uint64_t> classify(const EigenSequence& s1,
                                    const EigenSequence& s2,
                                    const SetSelector& sel, std::uint64_t x);

// (a_p^2 - p^(k-1)) / p^(k-1) as an exact rational.
mpq_class adjoint_coeff(const EigenSequence& seq, std::uint64_t p);

struct DensityRow {
  double s = 0;
  double numerator = 0;    // sum of p^(-s) over member primes <= X
  double denominator = 0;  // log(1/(s-1))
  double ratio = 0;
  double tail_bound = 0;  // X^(1-s) / ((s-1) log X), the truncation error scale
};

struct DensityEstimate {
  SetSelector selector;
  std::uint64_t truncation = 0;
  std::uint64_t members = 0;
  std::vector<DensityRow> rows;
};

// s value anchoring the truncated estimates: 1 + 3/log X keeps the tail
// subdominant since (s-1) log X = 3.
double anchor_s(std::uint64_t X);

// {1.2, 1.1, 1.05, anchor_s(X)} sorted descending, deduplicated.
std::vector<double> default_s_schedule(std::uint64_t X);

DensityEstimate density_estimate(const std::vector<std::uint64_t>& members,
                                 const SetSelector& sel, std::uint64_t X,
                                 std::vector<double> s_schedule);

// ---- Reference lower-bound tables ------------------------------------------
//
// Closed-form lower bounds for the densities above, split by which of the two
// forms is dihedral and branch-selected by the signs of cos 2alpha and
// cos alpha. kappa1/kappa2 are the usual cubic-twist / self-twist refinement
// flags in {0, 1}; pass -1 when unknown.

enum class BoundTableId {
  alpha_distinct,   // distinct pair, any types
  alpha_non_twist,  // pair not twist-equivalent
  abs_set,          // |lambda_1| != |lambda_2|
  square_sum_set,   // |lambda_1|^2 + |lambda_2|^2 != 2
};

struct BoundCase {
  BoundTableId table = BoundTableId::alpha_distinct;
  bool dihedral1 = false;
  bool dihedral2 = false;
  double alpha = 0;
  int kappa1 = -1;
  int kappa2 = -1;
};

struct BoundValue {
  std::string expr;  // human-readable closed form, e.g. "1/(6+2cos2a-8cosa)"
  double value = 0;
};

BoundValue bound_table(const BoundCase& c);

// Worst-case constants quoted without case data: S_alpha over distinct pairs
// (1/16), S_alpha over non-twist-equivalent pairs (2/13), and the
// all-alpha intersection over non-twist-equivalent pairs (1/11).
struct AbstractBounds {
  double alpha_distinct = 0;
  double alpha_non_twist = 0;
  double intersection_non_twist = 0;
};
AbstractBounds abstract_bounds();

// ---- Cauchy-Schwarz cross-check --------------------------------------------

struct CauchySchwarzCheck {
  double alpha = 0;
  double s = 0;
  double lhs = 0;        // sum |lambda_1 - e^{i alpha} lambda_2|^2 p^(-s)
  double rhs = 0;        // (4th moment)^(1/2) (member zeta sum)^(1/2)
  bool holds = false;    // lhs <= rhs + 1e-9
  std::uint64_t sampled = 0;
  double termwise_max_rel = 0;  // worst relative gap of the 9-term expansion
  bool termwise_ok = false;     // termwise_max_rel <= 1e-9
};

// Verifies lhs <= rhs with both sides computed from the data, and checks the
// 9-term complex expansion of |z1 - e^{i alpha} z2|^4 termwise against the
// direct fourth power at 100 evenly sampled common primes.
CauchySchwarzCheck cauchy_schwarz_check(const EigenSequence& s1,
                                        const EigenSequence& s2, double alpha,
                                        double s, std::uint64_t X);

}  // namespace strongmult
