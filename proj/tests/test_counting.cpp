#include <cmath>
#include <cstdint>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "strongmult/counting.hpp"
#include "strongmult/generators.hpp"
#include "strongmult/primes.hpp"

using namespace strongmult;

namespace {

constexpr double kPi = std::numbers::pi;

struct PairFixture {
  EigenSequence delta = tau_sequence(2000);
  EigenSequence e11 = e11_sequence(2000);
  EigenSequence cm32 = cm32_sequence(2000);
};

const PairFixture& fixture() {
  static const PairFixture f;
  return f;
}

}  // namespace

TEST_CASE("split counts agree with exact rational comparisons") {
  const auto& f = fixture();
  const std::uint64_t x = 2000;
  const SplitCounts got = count_split(f.e11, f.cm32, x);
  const std::uint64_t got_sq = count_square_equal(f.e11, f.cm32, x);

  std::uint64_t n_eq = 0, n_flip = 0, n_sq = 0, n_zero = 0;
  for (const auto& e : f.e11.entries()) {
    if (e.p > x) break;
    const mpz_class* b = f.cm32.find(e.p);
    if (!b) continue;
    if (oracles::lambda_equal(e.a, 2, *b, 2, e.p)) ++n_eq;
    if (oracles::lambda_flip_equal(e.a, 2, *b, 2, e.p)) ++n_flip;
    if (oracles::lambda_sq_equal(e.a, 2, *b, 2, e.p)) ++n_sq;
    if (e.a == 0 && *b == 0) ++n_zero;
  }
  CHECK(got.n_equal == n_eq);
  CHECK(got.n_flip == n_flip);
  CHECK(got.n_both_zero == n_zero);
  CHECK(got_sq == n_sq);
  CHECK(got.n_equal + got.n_flip - got_sq == got.n_both_zero);
}

TEST_CASE("split counts across unequal weights use the exact weight scaling") {
  const auto& f = fixture();
  const std::uint64_t x = 2000;
  const SplitCounts got = count_split(f.delta, f.e11, x);
  const SplitCounts swapped = count_split(f.e11, f.delta, x);
  CHECK(got.n_equal == swapped.n_equal);
  CHECK(got.n_flip == swapped.n_flip);
  CHECK(got.n_both_zero == swapped.n_both_zero);

  std::uint64_t n_eq = 0, n_flip = 0, n_sq = 0;
  for (const auto& e : f.delta.entries()) {
    if (e.p > x) break;
    const mpz_class* b = f.e11.find(e.p);
    if (!b) continue;
    if (oracles::lambda_equal(e.a, 12, *b, 2, e.p)) ++n_eq;
    if (oracles::lambda_flip_equal(e.a, 12, *b, 2, e.p)) ++n_flip;
    if (oracles::lambda_sq_equal(e.a, 12, *b, 2, e.p)) ++n_sq;
  }
  CHECK(got.n_equal == n_eq);
  CHECK(got.n_flip == n_flip);
  CHECK(count_square_equal(f.delta, f.e11, x) == n_sq);
}

TEST_CASE("a pair with itself is degenerate in the expected way") {
  const auto& f = fixture();
  const std::uint64_t x = 2000;
  const SplitCounts got = count_split(f.e11, f.e11, x);
  const std::uint64_t common = f.e11.entries().size();
  std::uint64_t zeros = 0;
  for (const auto& e : f.e11.entries())
    if (e.a == 0) ++zeros;

  CHECK(got.n_equal == common);
  CHECK(got.n_flip == zeros);
  CHECK(got.n_both_zero == zeros);
  CHECK(count_square_equal(f.e11, f.e11, x) == common);
}

TEST_CASE("joint oscillation sum at degree one is the plain product sum") {
  const auto& f = fixture();
  const AngleSequence a1 = angles(f.delta);
  const AngleSequence a2 = angles(f.e11);
  double direct = 0.0;
  for (const auto& u : a1.points()) {
    const mpz_class* b = f.e11.find(u.p);
    if (!b) continue;
    double l2 = 0.0;
    for (const auto& v : a2.points())
      if (v.p == u.p) l2 = v.lambda;
    direct += u.lambda * l2;
  }
  CHECK(sato_tate_sum(a1, a2, 1, 1, 2000) ==
        doctest::Approx(direct).epsilon(1e-9));
  CHECK_THROWS_AS(sato_tate_sum(a1, a2, -1, 1, 2000), ValidationError);
}

TEST_CASE("zero-degree oscillation sum counts the common support") {
  const auto& f = fixture();
  const AngleSequence a1 = angles(f.e11);
  const AngleSequence a2 = angles(f.cm32);
  std::uint64_t common = 0;
  for (const auto& e : f.e11.entries())
    if (f.cm32.find(e.p)) ++common;
  CHECK(sato_tate_sum(a1, a2, 0, 0, 2000) ==
        doctest::Approx(static_cast<double>(common)).epsilon(1e-12));
}

TEST_CASE("majorant route dominates the exact coincidence counts") {
  const auto& f = fixture();
  const std::uint64_t x = 2000;
  const SplitCounts counts = count_split(f.delta, f.e11, x);
  const AngleSequence a1 = angles(f.delta);
  const AngleSequence a2 = angles(f.e11);
  std::uint64_t common = 0;
  for (const auto& e : f.delta.entries())
    if (e.p <= x && f.e11.find(e.p)) ++common;

  for (int M : {5, 10, 20}) {
    const SelbergMajorant maj = selberg_fourier(default_delta(M), M);
    const double plus = majorant_count_bound(a1, a2, maj, x, false);
    const double minus = majorant_count_bound(a1, a2, maj, x, true);
    CHECK(static_cast<double>(counts.n_equal) <= plus + 1e-9 * common);
    CHECK(static_cast<double>(counts.n_flip) <= minus + 1e-9 * common);

    const double plus_f = majorant_count_bound_fourier(a1, a2, maj, x, false);
    const double minus_f = majorant_count_bound_fourier(a1, a2, maj, x, true);
    CHECK(plus_f == doctest::Approx(plus).epsilon(1e-6));
    CHECK(minus_f == doctest::Approx(minus).epsilon(1e-6));
  }
}

TEST_CASE("shape formulas evaluate their closed forms") {
  const double x = 16.0;
  const double Q = 264.0;
  const double llx = std::log(std::log(x));
  const double pix = 6.0;  // primes up to 16
  CHECK(bound_shape(x, Q, BoundMode::unconditional) ==
        doctest::Approx(pix * std::log(Q * llx) / std::sqrt(llx)).epsilon(1e-12));
  CHECK(bound_shape(x, Q, BoundMode::grh) ==
        doctest::Approx(std::pow(x, 5.0 / 6.0) *
                        std::pow(std::log(Q * x), 1.0 / 3.0) /
                        std::pow(std::log(x), 2.0 / 3.0))
            .epsilon(1e-12));
  CHECK_THROWS_AS(bound_shape(15.9, Q, BoundMode::grh), ValidationError);
  CHECK_THROWS_AS(bound_shape(100.0, 0.5, BoundMode::grh), ValidationError);
}

TEST_CASE("count report carries rows, invariants and the conductor product") {
  const auto& f = fixture();
  CountParams params;
  params.M = 8;
  params.m_max = 3;
  const CountReport rep =
      build_count_report(f.delta, f.e11, {2000, 1000, 1000}, params);

  CHECK(rep.Q == 12.0 * 1.0 * 2.0 * 11.0);
  CHECK(rep.params.delta == default_delta(8));  // 0 selects the default
  REQUIRE(rep.x_grid.size() == 2);  // sorted, deduplicated
  CHECK(rep.x_grid[0] == 1000);
  CHECK(rep.x_grid[1] == 2000);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].x == 1000);
  CHECK(rep.rows[1].x == 2000);
  CHECK(rep.rows[0].pi_x == prime_count(1000) - 1);  // p = 11 ramified
  CHECK(rep.rows[1].sato_tate.size() == 9);
  CHECK(rep.all_pass);
  for (const auto& inv : rep.invariants) CHECK(inv.pass);
  // Six invariant checks per cutoff.
  CHECK(rep.invariants.size() == 12);

  // Monotone in x.
  CHECK(rep.rows[0].n_square_equal <= rep.rows[1].n_square_equal);
  CHECK(rep.rows[0].pi_x < rep.rows[1].pi_x);
}

TEST_CASE("count report input validation") {
  const auto& f = fixture();
  CountParams params;
  CHECK_THROWS_AS(build_count_report(f.delta, f.e11, {}, params),
                  ValidationError);
  CHECK_THROWS_AS(build_count_report(f.delta, f.e11, {10, 1000}, params),
                  ValidationError);
  CHECK_THROWS_AS(build_count_report(f.delta, f.e11, {1000, 5000}, params),
                  ValidationError);  // past the generated bound
  CountParams bad = params;
  bad.M = 0;
  CHECK_THROWS_AS(build_count_report(f.delta, f.e11, {1000}, bad),
                  ValidationError);
  bad = params;
  bad.m_max = 0;
  CHECK_THROWS_AS(build_count_report(f.delta, f.e11, {1000}, bad),
                  ValidationError);
  bad = params;
  bad.m_max = 65;
  CHECK_THROWS_AS(build_count_report(f.delta, f.e11, {1000}, bad),
                  ValidationError);
  bad = params;
  bad.delta = 1.5;
  CHECK_THROWS_AS(build_count_report(f.delta, f.e11, {1000}, bad),
                  ValidationError);
  bad = params;
  bad.delta = -0.1;
  CHECK_THROWS_AS(build_count_report(f.delta, f.e11, {1000}, bad),
                  ValidationError);
}

TEST_CASE("cutoff past either bound is rejected with both bounds named") {
  const auto& f = fixture();
  const auto small = e11_sequence(100);
  CHECK_THROWS_WITH_AS(count_split(f.delta, small, 500),
                       doctest::Contains("exceeds a sequence bound"),
                       ValidationError);
  CHECK_NOTHROW(count_split(f.delta, small, 100));
}
