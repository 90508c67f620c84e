#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "strongmult/primes.hpp"

using namespace strongmult;

TEST_CASE("prime counts match trial division") {
  for (std::uint64_t x : {0ull, 1ull, 2ull, 10ull, 100ull, 1000ull, 10000ull}) {
    CHECK(prime_count(x) == oracles::prime_count_trial(x));
  }
}

TEST_CASE("sieve output is prime, ascending and complete") {
  const auto primes = sieve_primes(10000);
  CHECK(primes.size() == oracles::prime_count_trial(10000));
  CHECK(primes.front() == 2);
  CHECK(primes.back() == 9973);
  for (std::size_t i = 1; i < primes.size(); ++i)
    CHECK(primes[i - 1] < primes[i]);
  for (std::uint64_t p : primes) CHECK(is_prime(p));
}

TEST_CASE("sieve around a segment boundary") {
  // 65537 is prime and 65536 is a likely internal block edge.
  const auto a = sieve_primes(65535);
  const auto b = sieve_primes(65536);
  const auto c = sieve_primes(65537);
  CHECK(a.size() == b.size());
  CHECK(c.size() == b.size() + 1);
  CHECK(c.back() == 65537);
}

TEST_CASE("empty ranges") {
  CHECK(sieve_primes(0).empty());
  CHECK(sieve_primes(1).empty());
  CHECK(prime_count(1) == 0);
}

TEST_CASE("is_prime edge cases") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(561));    // Carmichael
  CHECK_FALSE(is_prime(29341));  // Carmichael
  CHECK(is_prime((1ull << 31) - 1));
  CHECK(is_prime((1ull << 61) - 1));
  CHECK_FALSE(is_prime((1ull << 61) - 3));
  CHECK_FALSE(is_prime(1ull << 62));
}

TEST_CASE("modular helpers near the 64-bit edge") {
  const std::uint64_t m = 0xffffffffffffffc5ull;  // largest 64-bit prime
  CHECK(mulmod(m - 1, m - 1, m) == 1);
  CHECK(powmod(2, m - 1, m) == 1);  // Fermat
  CHECK(powmod(3, 0, 7) == 1);
  CHECK(mulmod(123456789, 987654321, 1000000007) ==
        123456789ull * 987654321ull % 1000000007ull);
}
