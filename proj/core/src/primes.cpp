#include "strongmult/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace strongmult {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  primes.reserve(bound > 16 ? static_cast<std::size_t>(
                                  1.3 * static_cast<double>(bound) /
                                  std::log(static_cast<double>(bound))) +
                                  16
                            : 8);

  const std::uint64_t root = static_cast<std::uint64_t>(
      std::sqrt(static_cast<double>(bound))) + 1;

  // Base primes up to sqrt(bound) by a plain sieve.
  std::vector<char> base(root + 1, 1);
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    base_primes.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
  }

  constexpr std::uint64_t kSegment = 1 << 16;
  std::vector<char> seg(kSegment);
  std::vector<std::uint64_t> next(base_primes.size());
  for (std::size_t i = 0; i < base_primes.size(); ++i)
    next[i] = base_primes[i] * base_primes[i];

  for (std::uint64_t low = 2; low <= bound; low += kSegment) {
    const std::uint64_t high = std::min(bound, low + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::size_t i = 0; i < base_primes.size(); ++i) {
      const std::uint64_t p = base_primes[i];
      if (p * p > high) break;
      std::uint64_t j = next[i];
      if (j < low) j = low + (p - low % p) % p;
      for (; j <= high; j += p) seg[j - low] = 0;
      next[i] = j;
    }
    for (std::uint64_t v = low; v <= high; ++v)
      if (seg[v - low]) primes.push_back(v);
  }
  return primes;
}

std::uint64_t prime_count(std::uint64_t bound) {
  return sieve_primes(bound).size();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a known deterministic witness set for 64 bits.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace strongmult
