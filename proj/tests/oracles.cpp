#include "oracles.hpp"

#include <stdexcept>

namespace oracles {

std::vector<mpz_class> tau_product_expansion(std::size_t n_max) {
  if (n_max == 0) return {};
  // binom[j] = C(24, j) with alternating sign: (1 - t)^24 = sum_j binom[j] t^j
  mpz_class binom[25];
  binom[0] = 1;
  for (int j = 1; j <= 24; ++j)
    binom[j] = -binom[j - 1] * (25 - j) / j;

  // a holds the expansion of prod (1 - q^n)^24 up to degree n_max - 1.
  std::vector<mpz_class> a(n_max);
  a[0] = 1;
  for (std::size_t n = 1; n < n_max; ++n) {
    // Multiply in place by sum_j binom[j] q^(n j); descending degree so the
    // lower-degree inputs are still untouched when read.
    for (std::size_t i = n_max; i-- > n;) {
      mpz_class acc = a[i];
      for (std::size_t j = 1; j <= 24 && n * j <= i; ++j)
        acc += binom[j] * a[i - n * j];
      a[i] = acc;
    }
  }
  return a;  // a[i] multiplies q^(i+1) once the leading q is restored
}

namespace {

std::vector<std::uint32_t> square_occurrences(std::uint64_t p, bool plus_y) {
  // counts[v] = #{y in F_p : y^2 (+ y) = v}
  std::vector<std::uint32_t> counts(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) {
    const unsigned __int128 yy = static_cast<unsigned __int128>(y) * y;
    const std::uint64_t v =
        static_cast<std::uint64_t>((yy + (plus_y ? y : 0)) % p);
    ++counts[v];
  }
  return counts;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

long curve11_trace(std::uint64_t p) {
  if (p == 11) throw std::invalid_argument("bad reduction at 11");
  const std::vector<std::uint32_t> counts = square_occurrences(p, true);
  std::uint64_t affine = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x2 = mul_mod(x, x, p);
    const std::uint64_t x3 = mul_mod(x2, x, p);
    std::uint64_t v = (x3 + p - x2) % p;
    v = (v + p - mul_mod(10 % p, x, p)) % p;
    v = (v + p - 20 % p) % p;
    affine += counts[v];
  }
  return static_cast<long>(p) - static_cast<long>(affine);
}

long curve32_trace(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("bad reduction at 2");
  const std::vector<std::uint32_t> counts = square_occurrences(p, false);
  std::uint64_t affine = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t x3 = mul_mod(mul_mod(x, x, p), x, p);
    affine += counts[(x3 + p - x) % p];
  }
  return static_cast<long>(p) - static_cast<long>(affine);
}

std::uint64_t prime_count_trial(std::uint64_t x) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 2; n <= x; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ++count;
  }
  return count;
}

namespace {

mpq_class reduced_lambda(const mpz_class& a, int k, std::uint64_t p) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), p, static_cast<unsigned long>((k - 2) / 2));
  mpq_class q(a, den);
  q.canonicalize();
  return q;
}

}  // namespace

bool lambda_equal(const mpz_class& a1, int k1, const mpz_class& a2, int k2,
                  std::uint64_t p) {
  return reduced_lambda(a1, k1, p) == reduced_lambda(a2, k2, p);
}

bool lambda_flip_equal(const mpz_class& a1, int k1, const mpz_class& a2,
                       int k2, std::uint64_t p) {
  return reduced_lambda(a1, k1, p) == -reduced_lambda(a2, k2, p);
}

bool lambda_sq_equal(const mpz_class& a1, int k1, const mpz_class& a2, int k2,
                     std::uint64_t p) {
  mpq_class l1 = reduced_lambda(a1, k1, p);
  mpq_class l2 = reduced_lambda(a2, k2, p);
  return l1 * l1 == l2 * l2;
}

}  // namespace oracles
