#pragma once

#include <cstdint>
#include <vector>

namespace strongmult {

// Ascending primes <= bound; empty when bound < 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t bound);

// pi(bound).
std::uint64_t prime_count(std::uint64_t bound);

// Deterministic Miller-Rabin, exact for every 64-bit operand.
bool is_prime(std::uint64_t n);

// (a * b) mod m and (base ^ exp) mod m with 128-bit intermediates,
// valid for any m < 2^64.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace strongmult
