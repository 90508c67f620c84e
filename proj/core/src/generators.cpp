#include "strongmult/generators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "strongmult/primes.hpp"

namespace strongmult {

namespace {

// 31-bit prime moduli for the residue series. Their running product is taken
// until it exceeds 8 * bound^(11/2), which certifies the centered CRT lift.
constexpr std::uint32_t kSeriesModuli[] = {2147483647u, 2147483629u,
                                           2147483587u, 2147483579u,
                                           2147483563u, 2147483549u};

unsigned worker_threads() {
  if (const char* env = std::getenv("STRONGMULT_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1)
      return static_cast<unsigned>(std::min(v, 64ul));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// f(0), ..., f(count-1) on up to worker_threads() threads. Each index is
// handled exactly once and writes only its own slots, so the result does not
// depend on the thread count.
template <class F>
void run_indexed(std::size_t count, F&& f) {
  const unsigned t =
      static_cast<unsigned>(std::min<std::size_t>(worker_threads(), count));
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        f(i);
      }
    });
  for (auto& th : pool) th.join();
}

void check_limit(std::uint64_t bound) {
  if (bound > kGeneratorLimit)
    throw ValidationError("generator limit is " +
                          std::to_string(kGeneratorLimit) +
                          ", requested bound " + std::to_string(bound));
  if (bound < 1) throw ValidationError("generator bound must be >= 1");
}

// eta^24 modulo q, truncated to n coefficients (tau(i+1) lands at index i).
// eta^3 has the sparse expansion sum_m (-1)^m (2m+1) q^(m(m+1)/2), so eight
// in-place multiplications by that series give eta^24 in O(n sqrt(n)) per
// modulus. Descending target order keeps the update in place.
std::vector<std::uint32_t> eta24_mod(std::uint64_t n, std::uint32_t q) {
  std::vector<std::uint64_t> off;
  std::vector<std::uint64_t> cof;
  for (std::uint64_t m = 0;; ++m) {
    const std::uint64_t t = m * (m + 1) / 2;
    if (t >= n) break;
    off.push_back(t);
    std::uint64_t c = (2 * m + 1) % q;
    if (m & 1) c = q - c;
    cof.push_back(c);
  }
  std::vector<std::uint32_t> a(n, 0);
  a[0] = 1;
  for (int round = 0; round < 8; ++round) {
    for (std::uint64_t j = n; j-- > 0;) {
      unsigned __int128 acc = 0;
      for (std::size_t m = 0; m < off.size() && off[m] <= j; ++m)
        acc += cof[m] * a[j - off[m]];
      a[j] = static_cast<std::uint32_t>(acc % q);
    }
  }
  return a;
}

struct TauResidues {
  std::vector<std::uint32_t> moduli;
  std::vector<std::vector<std::uint32_t>> res;  // one coefficient array each
  mpz_class product;                            // of the moduli
};

TauResidues tau_residues(std::uint64_t bound, unsigned long margin) {
  // Need product > margin * 8 * bound^(11/2). margin = 1 certifies prime
  // indices (|tau(p)| <= 2 p^(11/2)); margin = 256 covers the divisor-count
  // factor at composite indices (d(n) <= 240 below 10^6).
  mpz_class need;
  mpz_ui_pow_ui(need.get_mpz_t(), bound, 11);
  mpz_sqrt(need.get_mpz_t(), need.get_mpz_t());
  need = 8 * (need + 1) * margin;

  TauResidues out;
  out.product = 1;
  for (std::uint32_t q : kSeriesModuli) {
    out.moduli.push_back(q);
    out.product *= q;
    if (out.product > need) break;
  }
  if (out.product <= need)
    throw InvariantFailure("modulus pool exhausted for bound " +
                           std::to_string(bound));

  out.res.resize(out.moduli.size());
  run_indexed(out.moduli.size(), [&](std::size_t i) {
    out.res[i] = eta24_mod(bound, out.moduli[i]);
  });
  return out;
}

// Centered CRT lift of the residues at coefficient index `idx`.
class CrtLift {
 public:
  explicit CrtLift(const TauResidues& r) : r_(r) {
    prefix_.resize(r.moduli.size());
    inv_.resize(r.moduli.size());
    mpz_class acc = 1;
    for (std::size_t i = 0; i < r.moduli.size(); ++i) {
      prefix_[i] = acc;  // product of moduli before i
      const std::uint64_t m = r.moduli[i];
      const std::uint64_t pm = mpz_fdiv_ui(acc.get_mpz_t(), m);
      inv_[i] = i ? powmod(pm, m - 2, m) : 1;
      acc *= r.moduli[i];
    }
    half_ = r.product / 2;
  }

  mpz_class operator()(std::uint64_t idx) const {
    mpz_class v = r_.res[0][idx];
    for (std::size_t i = 1; i < r_.moduli.size(); ++i) {
      const std::uint64_t m = r_.moduli[i];
      const std::uint64_t vm = mpz_fdiv_ui(v.get_mpz_t(), m);
      const std::uint64_t ri = r_.res[i][idx];
      const std::uint64_t t = mulmod((ri + m - vm) % m, inv_[i], m);
      v += t * prefix_[i];
    }
    if (v > half_) v -= r_.product;
    return v;
  }

 private:
  const TauResidues& r_;
  std::vector<mpz_class> prefix_;
  std::vector<std::uint64_t> inv_;
  mpz_class half_;
};

}  // namespace

std::vector<mpz_class> tau_coefficients(std::uint64_t bound) {
  check_limit(bound);
  const TauResidues r = tau_residues(bound, 256);
  const CrtLift lift(r);
  std::vector<mpz_class> out(bound);
  for (std::uint64_t n = 1; n <= bound; ++n) out[n - 1] = lift(n - 1);
  return out;
}

EigenSequence tau_sequence(std::uint64_t bound) {
  check_limit(bound);
  const TauResidues r = tau_residues(bound, 1);
  const CrtLift lift(r);
  std::vector<PrimeEntry> entries;
  for (std::uint64_t p : sieve_primes(bound)) entries.push_back({p, lift(p - 1)});
  return EigenSequence({"delta", 12, 1, false, "builtin-delta"}, bound,
                       std::move(entries));
}

namespace {

// -sum_x chi(4x^3 - 4x^2 - 40x - 79) over F_p, odd p != 11. The character
// values come from a per-prime residue table; the cubic advances by finite
// differences, so the inner loop is add/compare only.
long e11_trace_odd(std::uint64_t p, std::vector<std::uint8_t>& qr) {
  qr.assign(p, 0);
  std::uint64_t s = 0;
  for (std::uint64_t x = 0; x <= (p - 1) / 2; ++x) {
    qr[s] = 1;
    s += 2 * x + 1;
    if (s >= p) s -= p;
  }
  std::uint64_t g = (p - 79 % p) % p;   // g(0)  = -79
  std::uint64_t d1 = (p - 40 % p) % p;  // dg(0) = -40
  std::uint64_t d2 = 16 % p;
  const std::uint64_t d3 = 24 % p;
  long long acc = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (g != 0) acc += qr[g] ? 1 : -1;
    g += d1;
    if (g >= p) g -= p;
    d1 += d2;
    if (d1 >= p) d1 -= p;
    d2 += d3;
    if (d2 >= p) d2 -= p;
  }
  return -acc;
}

long e11_trace_2() {
  long long affine = 0;
  for (long long x = 0; x < 2; ++x)
    for (long long y = 0; y < 2; ++y) {
      const long long lhs = (y * y + y) % 2;
      const long long rhs = (((x * x * x - x * x - 10 * x - 20) % 2) + 2) % 2;
      if (lhs == rhs) ++affine;
    }
  return 2 - affine;  // p - #affine
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r =
      static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// p = a^2 + b^2 for p = 1 mod 4 by Cornacchia descent from a square root of
// -1. Returns the trace 2a with a odd and a + b = 1 mod 4 (b even, b >= 0).
long cm32_trace(std::uint64_t p) {
  std::uint64_t nonres = 0;
  for (std::uint64_t n = 2;; ++n) {
    if (powmod(n, (p - 1) / 2, p) == p - 1) {
      nonres = n;
      break;
    }
  }
  const std::uint64_t root = powmod(nonres, (p - 1) / 4, p);
  for (const std::uint64_t x0 : {std::min(root, p - root), std::max(root, p - root)}) {
    std::uint64_t u = p, v = x0;
    while (v != 0 && v * v > p) {
      const std::uint64_t r = u % v;
      u = v;
      v = r;
    }
    if (v == 0) continue;
    const std::uint64_t m = p - v * v;
    const std::uint64_t b2 = isqrt_u64(m);
    if (b2 * b2 != m) continue;
    const long long odd = static_cast<long long>((v & 1) ? v : b2);
    const long long even = static_cast<long long>((v & 1) ? b2 : v);
    const long long a = ((odd + even) % 4 == 1) ? odd : -odd;
    return 2 * a;
  }
  throw InvariantFailure("no two-square decomposition found for prime " +
                         std::to_string(p));
}

}  // namespace

EigenSequence e11_sequence(std::uint64_t bound) {
  check_limit(bound);
  const std::vector<std::uint64_t> primes = sieve_primes(bound);
  std::vector<PrimeEntry> entries(primes.size());
  std::vector<char> keep(primes.size(), 1);

  const unsigned t = worker_threads();
  const std::size_t chunk = (primes.size() + t - 1) / std::max(1u, t);
  run_indexed(t, [&](std::size_t w) {
    std::vector<std::uint8_t> qr;
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(primes.size(), lo + chunk);
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint64_t p = primes[i];
      if (p == 11) {
        keep[i] = 0;
      } else if (p == 2) {
        entries[i] = {p, mpz_class(e11_trace_2())};
      } else {
        entries[i] = {p, mpz_class(e11_trace_odd(p, qr))};
      }
    }
  });

  std::vector<PrimeEntry> out;
  out.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (keep[i]) out.push_back(std::move(entries[i]));
  return EigenSequence({"e11", 2, 11, false, "builtin-e11"}, bound,
                       std::move(out));
}

EigenSequence cm32_sequence(std::uint64_t bound) {
  check_limit(bound);
  std::vector<PrimeEntry> entries;
  for (std::uint64_t p : sieve_primes(bound)) {
    if (p == 2) continue;  // ramified
    if (p % 4 == 3)
      entries.push_back({p, mpz_class(0)});
    else
      entries.push_back({p, mpz_class(cm32_trace(p))});
  }
  return EigenSequence({"cm32", 2, 32, true, "builtin-cm32"}, bound,
                       std::move(entries));
}

}  // namespace strongmult
