#include "strongmult/forms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "strongmult/primes.hpp"

namespace strongmult {

namespace {

void validate_descriptor(const FormDescriptor& d) {
  if (d.label.empty()) throw ValidationError("descriptor label must be non-empty");
  if (d.label.find_first_of(" \t\n\r") != std::string::npos)
    throw ValidationError("descriptor label must not contain whitespace");
  if (d.weight < 2 || d.weight % 2 != 0)
    throw ValidationError("weight must be a positive even integer, got " +
                          std::to_string(d.weight));
  if (d.level < 1) throw ValidationError("level must be >= 1");
}

}  // namespace

EigenSequence::EigenSequence(FormDescriptor desc, std::uint64_t bound,
                             std::vector<PrimeEntry> entries)
    : desc_(std::move(desc)), bound_(bound), entries_(std::move(entries)) {
  validate_descriptor(desc_);
  if (bound_ < 1) throw ValidationError("sequence bound must be >= 1");

  // One pass against the sieve checks primality, order, completeness and
  // ramification at once; the Deligne bound is checked per entry.
  const std::vector<std::uint64_t> primes = sieve_primes(bound_);
  std::size_t at = 0;
  mpz_class cap, sq;
  for (std::uint64_t p : primes) {
    if (desc_.level % p == 0) {
      if (at < entries_.size() && entries_[at].p == p)
        throw ValidationError("entry present for ramified prime " +
                              std::to_string(p));
      continue;
    }
    if (at >= entries_.size() || entries_[at].p != p)
      throw ValidationError("incomplete sequence: missing prime " +
                            std::to_string(p));
    const mpz_class& a = entries_[at].a;
    mpz_ui_pow_ui(cap.get_mpz_t(), p, static_cast<unsigned long>(desc_.weight - 1));
    cap *= 4;
    sq = a * a;
    if (sq > cap)
      throw ValidationError("Deligne bound violated at prime " +
                            std::to_string(p));
    ++at;
  }
  if (at != entries_.size())
    throw ValidationError("entry out of range or out of order at prime " +
                          std::to_string(entries_[at].p));
}

const mpz_class* EigenSequence::find(std::uint64_t p) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), p,
      [](const PrimeEntry& e, std::uint64_t v) { return e.p < v; });
  if (it == entries_.end() || it->p != p) return nullptr;
  return &it->a;
}

AngleSequence angles(const EigenSequence& seq) {
  const int k = seq.descriptor().weight;
  std::vector<AnglePoint> pts;
  pts.reserve(seq.entries().size());
  for (const PrimeEntry& e : seq.entries()) {
    const double num = e.a.get_d();
    const double den =
        std::pow(static_cast<double>(e.p), (k - 1) / 2.0);
    const double lambda = num / den;
    if (std::abs(lambda) > 2.0 + 1e-12)
      throw InvariantFailure("normalized eigenvalue outside [-2,2] at prime " +
                             std::to_string(e.p));
    const double c = std::min(1.0, std::max(-1.0, lambda / 2.0));
    pts.push_back({e.p, lambda, std::acos(c)});
  }
  return AngleSequence(seq.descriptor(), seq.bound(), std::move(pts));
}

namespace {

bool squarefree(long long m) {
  if (m < 0) m = -m;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % (d * d) == 0) return false;
    while (m % d == 0) m /= d;
  }
  return true;
}

}  // namespace

bool is_fundamental_discriminant(long long d) {
  if (d == 0) return false;
  if (d == 1) return true;
  if (std::llabs(d) > 1000000000LL) return false;
  const long long m4 = ((d % 4) + 4) % 4;
  if (m4 == 1) return squarefree(d);
  if (m4 == 0) {
    const long long m = d / 4;
    const long long r = ((m % 4) + 4) % 4;
    return (r == 2 || r == 3) && squarefree(m);
  }
  return false;
}

int legendre_symbol(long long a, std::uint64_t p) {
  const long long pm = static_cast<long long>(p);
  std::uint64_t r = static_cast<std::uint64_t>(((a % pm) + pm) % pm);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker_at_prime(long long d, std::uint64_t p) {
  if (p == 2) {
    if (d % 2 == 0) return 0;
    const long long r = ((d % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  return legendre_symbol(d, p);
}

EigenSequence twist(const EigenSequence& seq, long long d) {
  if (d == 1 || d == -1) return seq;
  if (std::llabs(d) > 1000000000LL)
    throw ValidationError("twist discriminant magnitude capped at 10^9");
  if (!is_fundamental_discriminant(d))
    throw ValidationError("twist requires a fundamental discriminant, got " +
                          std::to_string(d));

  FormDescriptor nd = seq.descriptor();
  nd.label = "twist(" + nd.label + "," + std::to_string(d) + ")";
  nd.source = "twist";
  const std::uint64_t dd = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (seq.descriptor().level > UINT64_MAX / dd / dd)
    throw ValidationError("twisted level overflows 64 bits");
  nd.level = seq.descriptor().level * dd * dd;

  std::vector<PrimeEntry> out;
  out.reserve(seq.entries().size());
  for (const PrimeEntry& e : seq.entries()) {
    const int chi = kronecker_at_prime(d, e.p);
    if (chi == 0) continue;  // newly ramified
    out.push_back({e.p, chi > 0 ? e.a : mpz_class(-e.a)});
  }
  return EigenSequence(std::move(nd), seq.bound(), std::move(out));
}

}  // namespace strongmult
