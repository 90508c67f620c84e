#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "strongmult/forms.hpp"
#include "strongmult/generators.hpp"
#include "strongmult/primes.hpp"

using namespace strongmult;

namespace {

EigenSequence make(int weight, std::uint64_t level, std::uint64_t bound,
                   std::vector<PrimeEntry> entries) {
  FormDescriptor d;
  d.label = "synthetic";
  d.weight = weight;
  d.level = level;
  d.source = "file";
  return EigenSequence(std::move(d), bound, std::move(entries));
}

std::vector<PrimeEntry> zero_entries(std::uint64_t level, std::uint64_t bound) {
  std::vector<PrimeEntry> e;
  for (std::uint64_t p : sieve_primes(bound))
    if (level % p != 0) e.push_back({p, mpz_class(0)});
  return e;
}

}  // namespace

TEST_CASE("sequence validation accepts a complete consistent input") {
  const auto seq = make(2, 6, 20, zero_entries(6, 20));
  CHECK(seq.entries().size() == prime_count(20) - 2);  // 2 and 3 ramified
  CHECK(seq.bound() == 20);
}

TEST_CASE("sequence validation rejects bad shapes") {
  CHECK_THROWS_AS(make(3, 1, 10, zero_entries(1, 10)), ValidationError);
  CHECK_THROWS_AS(make(0, 1, 10, zero_entries(1, 10)), ValidationError);
  CHECK_THROWS_AS(make(2, 0, 10, zero_entries(1, 10)), ValidationError);

  auto missing = zero_entries(1, 10);
  missing.pop_back();  // drop p = 7
  CHECK_THROWS_AS(make(2, 1, 10, missing), ValidationError);

  auto ramified = zero_entries(1, 10);  // includes p = 2, but level 6 ramifies it
  CHECK_THROWS_AS(make(2, 6, 10, ramified), ValidationError);

  auto unsorted = zero_entries(1, 10);
  std::swap(unsorted[0], unsorted[1]);
  CHECK_THROWS_AS(make(2, 1, 10, unsorted), ValidationError);

  auto dup = zero_entries(1, 10);
  dup.push_back(dup.back());
  CHECK_THROWS_AS(make(2, 1, 10, dup), ValidationError);
}

TEST_CASE("sequence validation enforces the eigenvalue size bound") {
  auto entries = zero_entries(1, 10);
  entries[2].a = 4;  // p = 5, weight 2: 16 <= 20 is legal
  CHECK_NOTHROW(make(2, 1, 10, entries));
  entries[2].a = 5;  // 25 > 20
  CHECK_THROWS_AS(make(2, 1, 10, entries), ValidationError);
  entries[2].a = -5;
  CHECK_THROWS_AS(make(2, 1, 10, entries), ValidationError);
}

TEST_CASE("find resolves stored, ramified and out-of-range primes") {
  const auto seq = make(2, 6, 20, zero_entries(6, 20));
  REQUIRE(seq.find(5) != nullptr);
  CHECK(*seq.find(5) == 0);
  CHECK(seq.find(2) == nullptr);   // ramified
  CHECK(seq.find(3) == nullptr);   // ramified
  CHECK(seq.find(23) == nullptr);  // beyond the bound
  CHECK(seq.find(4) == nullptr);   // not prime
}

TEST_CASE("angles map zero eigenvalues to the central angle") {
  const auto seq = make(2, 1, 30, zero_entries(1, 30));
  const auto ang = angles(seq);
  REQUIRE(ang.points().size() == seq.entries().size());
  for (const auto& pt : ang.points()) {
    CHECK(pt.lambda == 0.0);
    CHECK(pt.theta == std::acos(0.0));  // pi/2, exactly
  }
}

TEST_CASE("angles stay in range at extremal eigenvalues") {
  auto entries = zero_entries(1, 10);
  entries[0].a = -2;  // p = 2, weight 2: lambda = -sqrt(2)
  entries[1].a = 3;   // p = 3: lambda = sqrt(3)
  const auto ang = angles(make(2, 1, 10, entries));
  for (const auto& pt : ang.points()) {
    CHECK(pt.lambda >= -2.0);
    CHECK(pt.lambda <= 2.0);
    CHECK(pt.theta >= 0.0);
    CHECK(pt.theta <= std::numbers::pi);
  }
  CHECK(ang.points()[0].lambda == doctest::Approx(-std::sqrt(2.0)));
  CHECK(ang.points()[1].lambda == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("fundamental discriminant recognition") {
  for (long long d : {1ll, -3ll, -4ll, 5ll, 8ll, -8ll, -7ll, 12ll, 13ll, -20ll})
    CHECK(is_fundamental_discriminant(d));
  for (long long d : {0ll, -1ll, 2ll, 3ll, 4ll, 9ll, -9ll, 25ll, 18ll, -12ll})
    CHECK_FALSE(is_fundamental_discriminant(d));
  CHECK_FALSE(is_fundamental_discriminant(4000000001ll));  // over the cap
}

TEST_CASE("legendre symbol basics") {
  CHECK(legendre_symbol(0, 7) == 0);
  CHECK(legendre_symbol(25, 7) == 1);   // reduces to 4
  CHECK(legendre_symbol(-1, 5) == 1);   // 5 = 1 mod 4
  CHECK(legendre_symbol(-1, 7) == -1);  // 7 = 3 mod 4
  CHECK(legendre_symbol(2, 7) == 1);
  CHECK(legendre_symbol(2, 5) == -1);
  for (std::uint64_t p : sieve_primes(100)) {
    if (p == 2) continue;
    // Euler's criterion output is a genuine character: multiplicative check.
    const long long a = 3, b = 10;
    CHECK(legendre_symbol(a * b, p) ==
          legendre_symbol(a, p) * legendre_symbol(b, p));
  }
}

TEST_CASE("kronecker character matches legendre at odd primes") {
  for (long long d : {-3ll, -4ll, 5ll, 8ll, -8ll, 12ll, -7ll}) {
    for (std::uint64_t p : sieve_primes(200)) {
      if (p == 2) continue;
      if (d % static_cast<long long>(p) == 0) {
        CHECK(kronecker_at_prime(d, p) == 0);
      } else {
        CHECK(kronecker_at_prime(d, p) == legendre_symbol(d, p));
      }
    }
  }
}

TEST_CASE("kronecker character at two follows the mod 8 rule") {
  CHECK(kronecker_at_prime(-4, 2) == 0);
  CHECK(kronecker_at_prime(8, 2) == 0);
  CHECK(kronecker_at_prime(-7, 2) == 1);    // 1 mod 8
  CHECK(kronecker_at_prime(17, 2) == 1);    // 1 mod 8
  CHECK(kronecker_at_prime(-3, 2) == -1);   // 5 mod 8
  CHECK(kronecker_at_prime(5, 2) == -1);    // 5 mod 8
}

TEST_CASE("twist by a unit is the identity") {
  const auto seq = e11_sequence(500);
  for (long long d : {1ll, -1ll}) {
    const auto t = twist(seq, d);
    CHECK(t.descriptor().level == seq.descriptor().level);
    REQUIRE(t.entries().size() == seq.entries().size());
    for (std::size_t i = 0; i < t.entries().size(); ++i) {
      CHECK(t.entries()[i].p == seq.entries()[i].p);
      CHECK(t.entries()[i].a == seq.entries()[i].a);
    }
  }
}

TEST_CASE("twist flips signs by the character and adjusts the level") {
  const auto seq = e11_sequence(500);
  const auto t = twist(seq, -4);
  CHECK(t.descriptor().level == 11 * 16);
  CHECK(t.descriptor().weight == 2);
  CHECK(t.find(2) == nullptr);  // 2 divides the twisting discriminant
  for (const auto& e : t.entries()) {
    const int chi = kronecker_at_prime(-4, e.p);
    REQUIRE(chi != 0);
    CHECK(e.a == chi * *seq.find(e.p));
  }
}

TEST_CASE("twisting twice restores the eigenvalues away from the discriminant") {
  const auto seq = e11_sequence(500);
  const auto tt = twist(twist(seq, -4), -4);
  CHECK(tt.descriptor().level == 11 * 16 * 16);
  for (const auto& e : tt.entries()) {
    CHECK(e.a == *seq.find(e.p));
  }
}

TEST_CASE("twist rejects non-fundamental and oversized discriminants") {
  const auto seq = e11_sequence(100);
  CHECK_THROWS_AS(twist(seq, 9), ValidationError);
  CHECK_THROWS_AS(twist(seq, 0), ValidationError);

  // Level would overflow 64 bits after multiplying by d^2.
  const std::uint64_t big = 1000000000000000000ull;
  const auto huge = make(2, big, 10, zero_entries(big, 10));
  CHECK_THROWS_AS(twist(huge, 5), ValidationError);
}
