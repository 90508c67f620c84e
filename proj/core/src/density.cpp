#include "strongmult/density.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace strongmult {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double a) {
  if (!std::isfinite(a)) throw ValidationError("angle must be finite");
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r == kTwoPi) r = 0;
  return r;
}

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

}  // namespace

SetSelector make_selector(SetKind kind, double alpha) {
  SetSelector sel;
  sel.kind = kind;
  sel.alpha = (kind == SetKind::alpha) ? reduce_angle(alpha) : 0.0;
  return sel;
}

const char* set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::alpha:
      return "alpha";
    case SetKind::abs:
      return "abs";
    case SetKind::square_sum:
      return "square_sum";
    case SetKind::adjoint:
      return "adjoint";
  }
  throw ValidationError("unknown set kind");
}

std::vector<std::uint64_t> classify(const EigenSequence& s1,
                                    const EigenSequence& s2,
                                    const SetSelector& sel, std::uint64_t x) {
  check_cutoff(s1, s2, x);
  const int k1 = s1.descriptor().weight;
  const int k2 = s2.descriptor().weight;
  const bool swapped = k1 > k2;
  const unsigned long gap_half =
      static_cast<unsigned long>((swapped ? k1 - k2 : k2 - k1) / 2);

  // For sin(alpha) != 0 real data cannot satisfy lambda_1 = e^{i alpha}
  // lambda_2 unless both sides vanish, so those sets collapse to
  // (a_1, a_2) != (0, 0). Only the reduced angles 0 and pi need sign tests.
  enum class Mode { eq, flip, nonzero, square, sum };
  Mode mode;
  if (sel.kind == SetKind::alpha) {
    if (sel.alpha == 0.0)
      mode = Mode::eq;
    else if (sel.alpha == kPi)
      mode = Mode::flip;
    else
      mode = Mode::nonzero;
  } else if (sel.kind == SetKind::square_sum) {
    mode = Mode::sum;
  } else {
    mode = Mode::square;  // abs and adjoint share the membership test
  }

  std::vector<std::uint64_t> members;
  mpz_class pw, scaled, l, r, rhs2;
  for_common(s1, s2, x, [&](std::uint64_t p, const mpz_class& a1,
                            const mpz_class& a2) {
    bool member = false;
    switch (mode) {
      case Mode::eq:
      case Mode::flip: {
        const mpz_class& lo = swapped ? a2 : a1;
        const mpz_class& hi = swapped ? a1 : a2;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, gap_half);
        scaled = lo * pw;
        member = (mode == Mode::eq) ? (scaled != hi) : (scaled != -hi);
        break;
      }
      case Mode::nonzero:
        member = !(a1 == 0 && a2 == 0);
        break;
      case Mode::square: {
        mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(k2 - 1));
        l = a1 * a1 * pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(k1 - 1));
        r = a2 * a2 * pw;
        member = (l != r);
        break;
      }
      case Mode::sum: {
        mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(k2 - 1));
        l = a1 * a1 * pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(k1 - 1));
        l += a2 * a2 * pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p,
                      static_cast<unsigned long>(k1 + k2 - 2));
        rhs2 = 2 * pw;
        member = (l != rhs2);
        break;
      }
    }
    if (member) members.push_back(p);
  });
  return members;
}

mpq_class adjoint_coeff(const EigenSequence& seq, std::uint64_t p) {
  const mpz_class* a = seq.find(p);
  if (a == nullptr)
    throw ValidationError("prime " + std::to_string(p) +
                          " is ramified or beyond the sequence bound");
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), p,
                static_cast<unsigned long>(seq.descriptor().weight - 1));
  mpq_class q(*a * *a - pw, pw);
  q.canonicalize();
  return q;
}

double anchor_s(std::uint64_t X) {
  if (X < 21)
    throw ValidationError("truncation must be >= 21 so the anchor stays < 2");
  return 1.0 + 3.0 / std::log(static_cast<double>(X));
}

std::vector<double> default_s_schedule(std::uint64_t X) {
  std::vector<double> s = {1.2, 1.1, 1.05, anchor_s(X)};
  std::sort(s.begin(), s.end(), std::greater<>());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

DensityEstimate density_estimate(const std::vector<std::uint64_t>& members,
                                 const SetSelector& sel, std::uint64_t X,
                                 std::vector<double> s_schedule) {
  if (X < 2) throw ValidationError("truncation must be >= 2");
  if (s_schedule.empty()) throw ValidationError("empty s schedule");
  for (const double s : s_schedule)
    if (!(s > 1.0 && s < 2.0))
      throw ValidationError("schedule values must lie in (1, 2)");
  std::sort(s_schedule.begin(), s_schedule.end(), std::greater<>());
  s_schedule.erase(std::unique(s_schedule.begin(), s_schedule.end()),
                   s_schedule.end());

  DensityEstimate out;
  out.selector = sel;
  out.truncation = X;
  const double logX = std::log(static_cast<double>(X));
  for (const double s : s_schedule) {
    Accum num;
    std::uint64_t count = 0;
    for (const std::uint64_t p : members) {
      if (p > X) break;
      num.add(std::pow(static_cast<double>(p), -s));
      ++count;
    }
    out.members = count;
    DensityRow row;
    row.s = s;
    row.numerator = num.value();
    row.denominator = std::log(1.0 / (s - 1.0));
    row.ratio = row.numerator / row.denominator;
    row.tail_bound =
        std::pow(static_cast<double>(X), 1.0 - s) / ((s - 1.0) * logX);
    out.rows.push_back(row);
  }
  return out;
}

BoundValue bound_table(const BoundCase& c) {
  const auto check_flag = [](int v, const char* what) {
    if (v != -1 && v != 0 && v != 1)
      throw ValidationError(std::string(what) + " must be 0, 1, or -1 (unset)");
  };
  check_flag(c.kappa1, "cubic-twist flag");
  check_flag(c.kappa2, "central-character flag");
  const double c2 = std::cos(2.0 * c.alpha);
  const double c1 = std::cos(c.alpha);

  switch (c.table) {
    case BoundTableId::alpha_distinct: {
      if (c.kappa2 != -1)
        throw ValidationError(
            "central-character flag does not apply to the distinct-pair table");
      if (c.kappa1 != -1) {
        // Refined branch: valid only when both forms are non-dihedral.
        if (c.dihedral1 || c.dihedral2)
          throw ValidationError(
              "cubic-twist refinement requires both forms non-dihedral");
        if (c2 >= 0) {
          const double a = 1.0 / (3.0 + c2);
          const double b = 1.0 / (3.0 + c2 - 2.0 * c.kappa1 * c1);
          return {"min{1/(3+cos2a), 1/(3+cos2a-2*k1*cosa)}", std::min(a, b)};
        }
        const double a = 1.0 / 3.0;
        const double b = 1.0 / (3.0 - 2.0 * c.kappa1 * c1);
        return {"min{1/3, 1/(3-2*k1*cosa)}", std::min(a, b)};
      }
      if (c2 >= 0 && c1 >= 0) return {"1/(6+2cos2a)", 1.0 / (6.0 + 2.0 * c2)};
      if (c2 >= 0)
        return {"1/(6+2cos2a-8cosa)", 1.0 / (6.0 + 2.0 * c2 - 8.0 * c1)};
      if (c1 >= 0) return {"1/6", 1.0 / 6.0};
      return {"1/(6-8cosa)", 1.0 / (6.0 - 8.0 * c1)};
    }
    case BoundTableId::alpha_non_twist: {
      if (c.dihedral1 && c.dihedral2) {
        if (c.kappa1 != -1 || c.kappa2 != -1)
          throw ValidationError(
              "twist flags do not apply to the dihedral-pair branch");
        double d, dv;
        std::string expr;
        if (c2 >= 0 && c1 >= 0) {
          expr = "min{2/(7+2cos2a), 1/4}";
          d = 2.0 / (7.0 + 2.0 * c2);
        } else if (c2 >= 0) {
          expr = "min{2/(7+2cos2a-4cosa), 1/4}";
          d = 2.0 / (7.0 + 2.0 * c2 - 4.0 * c1);
        } else if (c1 >= 0) {
          expr = "min{2/7, 1/4}";
          d = 2.0 / 7.0;
        } else {
          expr = "min{2/(7-4cosa), 1/4}";
          d = 2.0 / (7.0 - 4.0 * c1);
        }
        dv = std::min(d, 0.25);
        return {expr, dv};
      }
      if (c.dihedral1 != c.dihedral2) {
        if (c.kappa1 != -1 || c.kappa2 != -1)
          throw ValidationError(
              "twist flags do not apply to the mixed-type branch");
        if (c2 >= 0) return {"2/(5+2cos2a)", 2.0 / (5.0 + 2.0 * c2)};
        return {"2/5", 2.0 / 5.0};
      }
      // Both non-dihedral: needs the equal-central-character flag.
      if (c.kappa1 != -1)
        throw ValidationError(
            "cubic-twist flag does not apply to the non-twist table");
      if (c.kappa2 == -1)
        throw ValidationError(
            "central-character flag required when both forms are non-dihedral");
      return {"2/(4+k2*cos2a)", 2.0 / (4.0 + c.kappa2 * c2)};
    }
    case BoundTableId::abs_set: {
      if (c.kappa1 != -1 || c.kappa2 != -1)
        throw ValidationError(
            "twist flags do not apply to the absolute-value table");
      if (c.dihedral1 && c.dihedral2) return {"1/8", 1.0 / 8.0};
      if (c.dihedral1 || c.dihedral2) return {"1/9.58", 1.0 / 9.58};
      return {"1/10.76", 1.0 / 10.76};
    }
    case BoundTableId::square_sum_set: {
      if (c.kappa1 != -1 || c.kappa2 != -1)
        throw ValidationError(
            "twist flags do not apply to the square-sum table");
      if (c.dihedral1 == c.dihedral2) return {"1/18", 1.0 / 18.0};
      return {"1/12", 1.0 / 12.0};
    }
  }
  throw ValidationError("unknown bound table");
}

AbstractBounds abstract_bounds() {
  return {1.0 / 16.0, 2.0 / 13.0, 1.0 / 11.0};
}

CauchySchwarzCheck cauchy_schwarz_check(const EigenSequence& s1,
                                        const EigenSequence& s2, double alpha,
                                        double s, std::uint64_t X) {
  if (!(s > 1.0)) throw ValidationError("exponent must be > 1");
  check_cutoff(s1, s2, X);

  const double a_red = reduce_angle(alpha);
  const double ca = std::cos(a_red);
  const double sa = std::sin(a_red);

  const AngleSequence ang1 = angles(s1);
  const AngleSequence ang2 = angles(s2);
  const auto& p1 = ang1.points();
  const auto& p2 = ang2.points();

  struct Pair {
    std::uint64_t p;
    double l1, l2;
  };
  std::vector<Pair> common;
  {
    std::size_t i = 0, j = 0;
    while (i < p1.size() && j < p2.size()) {
      if (p1[i].p > X || p2[j].p > X) break;
      if (p1[i].p < p2[j].p)
        ++i;
      else if (p1[i].p > p2[j].p)
        ++j;
      else {
        common.push_back({p1[i].p, p1[i].lambda, p2[j].lambda});
        ++i;
        ++j;
      }
    }
  }

  Accum lhs_acc, fourth_acc;
  for (const Pair& q : common) {
    const double w = std::pow(static_cast<double>(q.p), -s);
    const double sq =
        q.l1 * q.l1 - 2.0 * ca * q.l1 * q.l2 + q.l2 * q.l2;  // |l1-e^{ia}l2|^2
    lhs_acc.add(sq * w);
    fourth_acc.add(sq * sq * w);
  }

  Accum zeta_acc;
  const std::vector<std::uint64_t> members =
      classify(s1, s2, make_selector(SetKind::alpha, a_red), X);
  for (const std::uint64_t p : members)
    zeta_acc.add(std::pow(static_cast<double>(p), -s));

  CauchySchwarzCheck out;
  out.alpha = a_red;
  out.s = s;
  out.lhs = lhs_acc.value();
  out.rhs = std::sqrt(std::max(0.0, fourth_acc.value())) *
            std::sqrt(std::max(0.0, zeta_acc.value()));
  out.holds = out.lhs <= out.rhs + 1e-9;

  // Termwise cross-check of the nine-term complex expansion of
  // |z1 - e^{ia} z2|^4 against the direct fourth power, at up to 100 primes
  // strided evenly through the common support.
  const std::complex<double> em(ca, -sa);   // e^{-i alpha}
  const std::complex<double> ep(ca, sa);    // e^{+i alpha}
  const std::size_t want = 100;
  const std::size_t stride = common.empty() ? 1 : std::max<std::size_t>(1, common.size() / want);
  double max_rel = 0.0;
  std::uint64_t sampled = 0;
  for (std::size_t idx = 0; idx < common.size() && sampled < want;
       idx += stride) {
    const std::complex<double> a(common[idx].l1, 0.0);
    const std::complex<double> b(common[idx].l2, 0.0);
    const std::complex<double> ab = std::conj(a);
    const std::complex<double> bb = std::conj(b);
    const std::complex<double> expansion =
        a * a * ab * ab + em * em * a * a * bb * bb +
        ep * ep * ab * ab * b * b + b * b * bb * bb + 4.0 * a * ab * b * bb -
        2.0 * em * a * a * ab * bb - 2.0 * ep * a * ab * ab * b -
        2.0 * em * a * b * bb * bb - 2.0 * ep * ab * b * b * bb;
    const std::complex<double> z = a - ep * b;
    const double direct = std::norm(z) * std::norm(z);
    const double rel =
        std::abs(expansion - direct) / std::max(1.0, std::abs(direct));
    max_rel = std::max(max_rel, rel);
    ++sampled;
  }
  out.sampled = sampled;
  out.termwise_max_rel = max_rel;
  out.termwise_ok = max_rel <= 1e-9;
  return out;
}

}  // namespace strongmult
