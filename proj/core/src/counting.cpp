#include "strongmult/counting.hpp"

#include <algorithm>
#include <cmath>

#include "strongmult/primes.hpp"

namespace strongmult {

namespace {

// Neumaier-compensated accumulator; summands are always fed in ascending
// prime order, so the float result is a pure function of the inputs.
struct Accum {
  double s = 0.0, c = 0.0;
  void add(double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

void check_cutoff(const EigenSequence& s1, const EigenSequence& s2,
                  std::uint64_t x) {
  if (x > s1.bound() || x > s2.bound())
    throw ValidationError("cutoff " + std::to_string(x) +
                          " exceeds a sequence bound (" +
                          std::to_string(s1.bound()) + ", " +
                          std::to_string(s2.bound()) + ")");
}

// Calls f(p, a1, a2) over the common support, ascending, p <= x.
template <class F>
void for_common(const EigenSequence& s1, const EigenSequence& s2,
                std::uint64_t x, F&& f) {
  const auto& e1 = s1.entries();
  const auto& e2 = s2.entries();
  std::size_t i = 0, j = 0;
  while (i < e1.size() && j < e2.size()) {
    if (e1[i].p > x || e2[j].p > x) break;
    if (e1[i].p < e2[j].p) {
      ++i;
    } else if (e1[i].p > e2[j].p) {
      ++j;
    } else {
      f(e1[i].p, e1[i].a, e2[j].a);
      ++i;
      ++j;
    }
  }
}

template <class F>
void for_common_angles(const AngleSequence& a1, const AngleSequence& a2,
                       std::uint64_t x, F&& f) {
  const auto& e1 = a1.points();
  const auto& e2 = a2.points();
  std::size_t i = 0, j = 0;
  while (i < e1.size() && j < e2.size()) {
    if (e1[i].p > x || e2[j].p > x) break;
    if (e1[i].p < e2[j].p) {
      ++i;
    } else if (e1[i].p > e2[j].p) {
      ++j;
    } else {
      f(e1[i], e2[j]);
      ++i;
      ++j;
    }
  }
}

}  // namespace

std::uint64_t count_square_equal(const EigenSequence& s1,
                                 const EigenSequence& s2, std::uint64_t x) {
  check_cutoff(s1, s2, x);
  const unsigned long k1 = static_cast<unsigned long>(s1.descriptor().weight);
  const unsigned long k2 = static_cast<unsigned long>(s2.descriptor().weight);
  std::uint64_t count = 0;
  mpz_class l, r, pw;
  for_common(s1, s2, x, [&](std::uint64_t p, const mpz_class& a1,
                            const mpz_class& a2) {
    // lambda_1^2 = lambda_2^2  iff  a_1^2 p^(k2-1) = a_2^2 p^(k1-1)
    mpz_ui_pow_ui(pw.get_mpz_t(), p, k2 - 1);
    l = a1 * a1 * pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, k1 - 1);
    r = a2 * a2 * pw;
    if (l == r) ++count;
  });
  return count;
}

SplitCounts count_split(const EigenSequence& s1, const EigenSequence& s2,
                        std::uint64_t x) {
  check_cutoff(s1, s2, x);
  const int k1 = s1.descriptor().weight;
  const int k2 = s2.descriptor().weight;
  // Work with klo <= khi so the scale factor p^((khi-klo)/2) is integral
  // (both weights are even, so the gap is even).
  const bool swapped = k1 > k2;
  const unsigned long gap_half =
      static_cast<unsigned long>((swapped ? k1 - k2 : k2 - k1) / 2);

  SplitCounts out;
  mpz_class scaled, pw;
  for_common(s1, s2, x, [&](std::uint64_t p, const mpz_class& a1,
                            const mpz_class& a2) {
    const mpz_class& lo = swapped ? a2 : a1;
    const mpz_class& hi = swapped ? a1 : a2;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, gap_half);
    scaled = lo * pw;
    if (scaled == hi) ++out.n_equal;
    if (scaled == -hi) ++out.n_flip;
    if (a1 == 0 && a2 == 0) ++out.n_both_zero;
  });
  return out;
}

double sato_tate_sum(const AngleSequence& a1, const AngleSequence& a2, int m1,
                     int m2, std::uint64_t x) {
  if (m1 < 0 || m2 < 0) throw ValidationError("degrees must be >= 0");
  Accum acc;
  for_common_angles(a1, a2, x, [&](const AnglePoint& u, const AnglePoint& v) {
    const double xu = std::min(1.0, std::max(-1.0, u.lambda / 2.0));
    const double xv = std::min(1.0, std::max(-1.0, v.lambda / 2.0));
    acc.add(chebyshev_u(m1, xu) * chebyshev_u(m2, xv));
  });
  return acc.value();
}

double majorant_count_bound(const AngleSequence& a1, const AngleSequence& a2,
                            const SelbergMajorant& maj, std::uint64_t x,
                            bool flip) {
  Accum acc;
  const double pi = std::acos(-1.0);
  for_common_angles(a1, a2, x, [&](const AnglePoint& u, const AnglePoint& v) {
    const double t2 = flip ? pi - v.theta : v.theta;
    acc.add(majorant_bound(maj, u.theta - t2) +
            majorant_bound(maj, u.theta + t2));
  });
  return acc.value();
}

double majorant_count_bound_fourier(const AngleSequence& a1,
                                    const AngleSequence& a2,
                                    const SelbergMajorant& maj, std::uint64_t x,
                                    bool flip) {
  std::uint64_t n_common = 0;
  for_common_angles(a1, a2, x,
                    [&](const AnglePoint&, const AnglePoint&) { ++n_common; });

  double total =
      (2.0 * maj.delta + 2.0 / (maj.M + 1)) * static_cast<double>(n_common);
  for (int n = 1; n <= maj.M; ++n) {
    Accum tn;  // sum_p cos(n theta_1) cos(n theta_2)
    for_common_angles(a1, a2, x, [&](const AnglePoint& u, const AnglePoint& v) {
      tn.add(std::cos(n * u.theta) * std::cos(n * v.theta));
    });
    const double sign = (flip && (n & 1)) ? -1.0 : 1.0;
    total += 4.0 * maj.c[n] * sign * tn.value();
  }
  return total;
}

double bound_shape(double x, double Q, BoundMode mode) {
  if (!(x >= 16.0))
    throw ValidationError("bound shapes require x >= 16");
  if (!(Q >= 1.0)) throw ValidationError("conductor product must be >= 1");
  const double lx = std::log(x);
  if (mode == BoundMode::unconditional) {
    const double llx = std::log(lx);
    const double pix =
        static_cast<double>(prime_count(static_cast<std::uint64_t>(x)));
    return pix * std::log(Q * llx) / std::sqrt(llx);
  }
  return std::pow(x, 5.0 / 6.0) * std::cbrt(std::log(Q * x)) /
         std::pow(lx, 2.0 / 3.0);
}

CountReport build_count_report(const EigenSequence& s1, const EigenSequence& s2,
                               std::vector<std::uint64_t> x_grid,
                               const CountParams& params) {
  if (x_grid.empty()) throw ValidationError("empty cutoff grid");
  std::sort(x_grid.begin(), x_grid.end());
  x_grid.erase(std::unique(x_grid.begin(), x_grid.end()), x_grid.end());
  if (x_grid.front() < 16)
    throw ValidationError("cutoffs below 16 are rejected (shape formulas)");
  check_cutoff(s1, s2, x_grid.back());
  if (params.M < 1) throw ValidationError("majorant degree must be >= 1");
  if (params.m_max < 1 || params.m_max > 64)
    throw ValidationError("m_max must lie in [1, 64]");

  CountReport rep;
  rep.f1 = s1.descriptor();
  rep.f2 = s2.descriptor();
  rep.params = params;
  if (rep.params.delta == 0.0) rep.params.delta = default_delta(params.M);
  rep.Q = static_cast<double>(s1.descriptor().weight) *
          static_cast<double>(s1.descriptor().level) *
          static_cast<double>(s2.descriptor().weight) *
          static_cast<double>(s2.descriptor().level);
  rep.x_grid = x_grid;

  const SelbergMajorant maj = selberg_fourier(rep.params.delta, rep.params.M);
  const AngleSequence a1 = angles(s1);
  const AngleSequence a2 = angles(s2);

  rep.all_pass = true;
  auto push_inv = [&](const std::string& name, std::uint64_t x, bool pass,
                      double lhs, double rhs) {
    rep.invariants.push_back({name, x, pass, lhs, rhs});
    rep.all_pass = rep.all_pass && pass;
  };

  for (const std::uint64_t x : x_grid) {
    CountRow row;
    row.x = x;
    std::uint64_t n_common = 0;
    for_common(s1, s2, x,
               [&](std::uint64_t, const mpz_class&, const mpz_class&) {
                 ++n_common;
               });
    row.pi_x = n_common;
    row.n_square_equal = count_square_equal(s1, s2, x);
    const SplitCounts split = count_split(s1, s2, x);
    row.n_angle_equal = split.n_equal;
    row.n_angle_flip = split.n_flip;
    row.n_both_zero = split.n_both_zero;
    row.majorant_rhs_plus = majorant_count_bound(a1, a2, maj, x, false);
    row.majorant_rhs_minus = majorant_count_bound(a1, a2, maj, x, true);
    for (int m1 = 1; m1 <= params.m_max; ++m1)
      for (int m2 = 1; m2 <= params.m_max; ++m2)
        row.sato_tate.push_back({m1, m2, sato_tate_sum(a1, a2, m1, m2, x)});
    row.bound_shape_uncond =
        bound_shape(static_cast<double>(x), rep.Q, BoundMode::unconditional);
    row.bound_shape_grh =
        bound_shape(static_cast<double>(x), rep.Q, BoundMode::grh);

    const double slack = 1e-9 * static_cast<double>(row.pi_x);
    push_inv("split_decomposition_exact", x,
             row.n_angle_equal + row.n_angle_flip ==
                 row.n_square_equal + row.n_both_zero,
             static_cast<double>(row.n_angle_equal + row.n_angle_flip),
             static_cast<double>(row.n_square_equal + row.n_both_zero));
    push_inv("square_le_split_sum", x,
             row.n_square_equal <= row.n_angle_equal + row.n_angle_flip,
             static_cast<double>(row.n_square_equal),
             static_cast<double>(row.n_angle_equal + row.n_angle_flip));
    push_inv("majorant_dominates_plus", x,
             static_cast<double>(row.n_angle_equal) <=
                 row.majorant_rhs_plus + slack,
             static_cast<double>(row.n_angle_equal), row.majorant_rhs_plus);
    push_inv("majorant_dominates_minus", x,
             static_cast<double>(row.n_angle_flip) <=
                 row.majorant_rhs_minus + slack,
             static_cast<double>(row.n_angle_flip), row.majorant_rhs_minus);

    const double f_plus = majorant_count_bound_fourier(a1, a2, maj, x, false);
    const double f_minus = majorant_count_bound_fourier(a1, a2, maj, x, true);
    const double tol_plus =
        1e-6 * std::max(1.0, std::abs(row.majorant_rhs_plus));
    const double tol_minus =
        1e-6 * std::max(1.0, std::abs(row.majorant_rhs_minus));
    push_inv("fourier_rearrangement_plus", x,
             std::abs(f_plus - row.majorant_rhs_plus) <= tol_plus,
             row.majorant_rhs_plus, f_plus);
    push_inv("fourier_rearrangement_minus", x,
             std::abs(f_minus - row.majorant_rhs_minus) <= tol_minus,
             row.majorant_rhs_minus, f_minus);

    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace strongmult
