// Command-line front end: sequence generation, pair counting, density
// estimation, majorant verification, and the reference bound tables.
//
// Exit codes: 0 success, 1 invalid input or configuration, 2 a computed
// invariant failed. All output is deterministic for a fixed command line.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strongmult/counting.hpp"
#include "strongmult/density.hpp"
#include "strongmult/exchange.hpp"
#include "strongmult/generators.hpp"
#include "strongmult/majorants.hpp"
#include "strongmult/report.hpp"
#include "strongmult/version.hpp"

namespace {

using namespace strongmult;

constexpr std::uint64_t kDefaultCap = 1000000;

struct CommonOpts {
  std::string format = "json";
  std::string out;
  bool allow_large = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_cap = true) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write the report to this file instead of stdout");
  if (with_cap)
    cmd->add_flag("--allow-large", o.allow_large,
                  "Lift the default 10^6 cutoff cap (file-backed sequences only; "
                  "built-in generators stay capped)");
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file: " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::uint64_t check_cap(std::uint64_t x, const CommonOpts& o) {
  if (!o.allow_large && x > kDefaultCap)
    throw ValidationError("cutoff " + std::to_string(x) +
                          " exceeds the default cap of 1000000; pass "
                          "--allow-large to lift it");
  return x;
}

std::uint64_t parse_count(const std::string& tok) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size() || !(v >= 2) || v > 1e18 || v != std::floor(v))
      throw ValidationError("");
    return static_cast<std::uint64_t>(v);
  } catch (const ValidationError&) {
    throw ValidationError("not a whole number >= 2: '" + tok + "'");
  } catch (const std::exception&) {
    throw ValidationError("not a whole number >= 2: '" + tok + "'");
  }
}

// Splits on commas that sit at parenthesis depth zero, so twist(delta,-4)
// survives inside a pair or list.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (const char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (depth != 0) throw ValidationError("unbalanced parentheses in '" + s + "'");
  return parts;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Form selector: a built-in name, twist(<selector>, <d>), or a file path.
EigenSequence resolve_form(const std::string& raw, std::uint64_t bound,
                           const CommonOpts& o) {
  const std::string sel = trim(raw);
  if (sel.empty()) throw ValidationError("empty form selector");
  if (sel == "delta") return tau_sequence(bound);
  if (sel == "e11") return e11_sequence(bound);
  if (sel == "cm32") return cm32_sequence(bound);
  if (sel.starts_with("twist(") && sel.back() == ')') {
    const std::string inner = sel.substr(6, sel.size() - 7);
    const std::vector<std::string> parts = split_top_level(inner);
    if (parts.size() != 2)
      throw ValidationError("twist selector needs exactly two arguments: '" +
                            sel + "'");
    long long d = 0;
    try {
      std::size_t pos = 0;
      d = std::stoll(trim(parts[1]), &pos);
      if (pos != trim(parts[1]).size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ValidationError("twist discriminant must be an integer: '" +
                            parts[1] + "'");
    }
    return twist(resolve_form(parts[0], bound, o), d);
  }
  std::ifstream probe(sel);
  if (!probe)
    throw ValidationError(
        "unknown form selector '" + sel +
        "': expected delta, e11, cm32, twist(<form>,<d>), or a readable file");
  return load_sequence_file(sel);
}

void warn_if_slow(const std::string& sel, std::uint64_t bound) {
  const bool builtin = sel == "delta" || sel == "e11" || sel == "cm32" ||
                       sel.starts_with("twist(");
  if (builtin && bound > kGeneratorWarnBound)
    std::cerr << "note: generating '" << trim(sel) << "' up to " << bound
              << "; expect roughly a minute per 10^6 at this scale\n";
}

std::pair<EigenSequence, EigenSequence> resolve_pair(const std::string& pair,
                                                     std::uint64_t bound,
                                                     const CommonOpts& o) {
  const std::vector<std::string> parts = split_top_level(pair);
  if (parts.size() != 2)
    throw ValidationError("--pair expects exactly two selectors, got '" +
                          pair + "'");
  warn_if_slow(trim(parts[0]), bound);
  warn_if_slow(trim(parts[1]), bound);
  return {resolve_form(parts[0], bound, o), resolve_form(parts[1], bound, o)};
}

double parse_angle(const std::string& tok) {
  const std::string t = trim(tok);
  if (t == "pi") return std::numbers::pi;
  if (t == "-pi") return -std::numbers::pi;
  try {
    std::size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("not an angle: '" + tok + "' (use a real number or pi)");
  }
}

// ---- gen --------------------------------------------------------------------

int run_gen(const std::string& form, std::uint64_t bound, const CommonOpts& o) {
  check_cap(bound, o);
  warn_if_slow(form, bound);
  const EigenSequence seq = resolve_form(form, bound, o);
  if (o.out.empty()) {
    save_sequence(seq, std::cout);
  } else {
    save_sequence_file(seq, o.out);
  }
  return 0;
}

// ---- count ------------------------------------------------------------------

int run_count(const std::string& pair, const std::string& grid_csv,
              const CountParams& params, const CommonOpts& o) {
  std::vector<std::uint64_t> grid;
  for (const std::string& tok : split_top_level(grid_csv))
    grid.push_back(check_cap(parse_count(trim(tok)), o));
  if (grid.empty()) throw ValidationError("empty --grid");
  const std::uint64_t bound = *std::max_element(grid.begin(), grid.end());
  auto [s1, s2] = resolve_pair(pair, bound, o);
  const CountReport rep = build_count_report(s1, s2, grid, params);

  if (o.format == "json")
    emit(o, count_report_json(rep).dump());
  else if (o.format == "csv")
    emit(o, count_report_csv(rep));
  else
    emit(o, count_report_table(rep));

  if (!rep.all_pass) {
    std::cerr << "error: a counting invariant failed; see the invariants "
                 "section of the report\n";
    return 2;
  }
  return 0;
}

// ---- densities --------------------------------------------------------------

SetSelector parse_set(const std::string& tok) {
  const std::string t = trim(tok);
  if (t == "abs") return make_selector(SetKind::abs);
  if (t == "square_sum") return make_selector(SetKind::square_sum);
  if (t == "adjoint") return make_selector(SetKind::adjoint);
  if (t.starts_with("alpha="))
    return make_selector(SetKind::alpha, parse_angle(t.substr(6)));
  throw ValidationError("unknown set '" + t +
                        "': expected abs, square_sum, adjoint, or alpha=<v>");
}

int run_densities(const std::string& pair, std::uint64_t x,
                  const std::string& sets_csv, const std::string& sched_csv,
                  const CommonOpts& o) {
  check_cap(x, o);
  std::vector<SetSelector> sels;
  for (const std::string& tok : split_top_level(sets_csv))
    sels.push_back(parse_set(tok));

  std::vector<double> schedule;
  if (sched_csv.empty()) {
    schedule = default_s_schedule(x);
  } else {
    for (const std::string& tok : split_top_level(sched_csv)) {
      try {
        std::size_t pos = 0;
        const double v = std::stod(trim(tok), &pos);
        if (pos != trim(tok).size()) throw std::invalid_argument("");
        schedule.push_back(v);
      } catch (const std::exception&) {
        throw ValidationError("not a number in --schedule: '" + tok + "'");
      }
    }
  }

  auto [s1, s2] = resolve_pair(pair, x, o);
  std::vector<DensityEstimate> estimates;
  for (const SetSelector& sel : sels) {
    const std::vector<std::uint64_t> members = classify(s1, s2, sel, x);
    estimates.push_back(density_estimate(members, sel, x, schedule));
  }

  if (o.format == "json")
    emit(o, density_report_json(s1.descriptor(), s2.descriptor(), estimates)
                .dump());
  else if (o.format == "csv")
    emit(o, density_report_csv(estimates));
  else
    emit(o, density_report_table(estimates));
  return 0;
}

// ---- sato-tate ----------------------------------------------------------------

int run_sato_tate(const std::string& pair, std::uint64_t x, int m_max,
                  const CommonOpts& o) {
  check_cap(x, o);
  if (m_max < 1 || m_max > 64)
    throw ValidationError("--m-max must lie in [1, 64]");
  auto [s1, s2] = resolve_pair(pair, x, o);
  const AngleSequence a1 = angles(s1);
  const AngleSequence a2 = angles(s2);

  std::uint64_t pi_x = 0;
  {
    const auto& e1 = a1.points();
    const auto& e2 = a2.points();
    std::size_t i = 0, j = 0;
    while (i < e1.size() && j < e2.size()) {
      if (e1[i].p > x || e2[j].p > x) break;
      if (e1[i].p < e2[j].p)
        ++i;
      else if (e1[i].p > e2[j].p)
        ++j;
      else
        ++pi_x, ++i, ++j;
    }
  }

  struct Entry {
    int m1, m2;
    double sum, normalized;
  };
  std::vector<Entry> entries;
  for (int m1 = 1; m1 <= m_max; ++m1)
    for (int m2 = 1; m2 <= m_max; ++m2) {
      const double s = sato_tate_sum(a1, a2, m1, m2, x);
      entries.push_back(
          {m1, m2, s, pi_x ? s / static_cast<double>(pi_x) : 0.0});
    }

  if (o.format == "json") {
    Json root = Json::object();
    root.set("report", Json::string("sato_tate"));
    root.set("version", Json::string(std::string(kVersion)));
    root.set("f1", descriptor_json(s1.descriptor()));
    root.set("f2", descriptor_json(s2.descriptor()));
    root.set("x", Json::uinteger(x));
    root.set("pi_x", Json::uinteger(pi_x));
    Json arr = Json::array();
    for (const Entry& e : entries) {
      Json je = Json::object();
      je.set("m1", Json::integer(e.m1));
      je.set("m2", Json::integer(e.m2));
      je.set("sum", Json::number(e.sum));
      je.set("normalized", Json::number(e.normalized));
      arr.push(std::move(je));
    }
    root.set("entries", std::move(arr));
    emit(o, root.dump());
  } else if (o.format == "csv") {
    std::string out = "m1,m2,sum,normalized\n";
    for (const Entry& e : entries) {
      out += std::to_string(e.m1) + ',' + std::to_string(e.m2) + ',' +
             format_double(e.sum) + ',' + format_double(e.normalized) + '\n';
    }
    emit(o, out);
  } else {
    char buf[128];
    std::string out;
    std::snprintf(buf, sizeof buf, "pair: %s x %s, x=%llu, pi_x=%llu\n",
                  s1.descriptor().label.c_str(), s2.descriptor().label.c_str(),
                  static_cast<unsigned long long>(x),
                  static_cast<unsigned long long>(pi_x));
    out += buf;
    for (const Entry& e : entries) {
      std::snprintf(buf, sizeof buf, "  U_%d x U_%d: sum=%-14.6f per-prime=%.6f\n",
                    e.m1, e.m2, e.sum, e.normalized);
      out += buf;
    }
    emit(o, out);
  }
  return 0;
}

// ---- majorant-check -----------------------------------------------------------

int run_majorant_check(int m_max, const std::string& deltas_csv,
                       int grid_points, int random_points, std::uint32_t seed,
                       const CommonOpts& o) {
  if (m_max < 1 || m_max > 200) throw ValidationError("--M-max must lie in [1, 200]");
  if (grid_points < 2 || random_points < 0)
    throw ValidationError("need at least 2 grid points and >= 0 random points");

  struct Check {
    int M;
    double delta;
    double min_gap;        // min S+(x) - chi(x); must be >= -1e-10
    double c0_err;         // |c0 - (delta + 1/(M+1))|
    double coeff_slack;    // max_n |c_n| - bound_n; must be <= 1e-10
    double tail_max;       // max |c_n| for M < n <= 2M+4; must be < 1e-8
    bool pass;
  };
  std::vector<Check> checks;
  bool all_pass = true;

  for (int M = 1; M <= m_max; ++M) {
    std::vector<double> deltas;
    if (deltas_csv.empty()) {
      deltas = {default_delta(M), 0.01, 0.1};
    } else {
      for (const std::string& tok : split_top_level(deltas_csv))
        deltas.push_back(std::stod(trim(tok)));
    }
    for (const double delta : deltas) {
      std::mt19937 rng(seed + static_cast<std::uint32_t>(M));
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const SelbergMajorant maj = selberg_fourier(delta, M);

      double min_gap = 1e30;
      auto probe_point = [&](double x) {
        const double xx = x - std::floor(x);
        const double chi = (xx <= delta) ? 1.0 : 0.0;
        min_gap = std::min(min_gap, selberg_plus(delta, M, x) - chi);
      };
      for (int i = 0; i < grid_points; ++i)
        probe_point(static_cast<double>(i) / grid_points);
      for (int i = 0; i < random_points; ++i) probe_point(unif(rng));

      const double c0_err = std::abs(maj.c[0] - (delta + 1.0 / (M + 1)));
      double coeff_slack = 0.0;
      for (int n = 1; n <= M; ++n) {
        const double cap =
            1.0 / (M + 1) + std::min(delta, 1.0 / (std::numbers::pi * n));
        coeff_slack = std::max(coeff_slack, std::abs(maj.c[n]) - cap);
      }
      double tail_max = 0.0;
      for (int n = M + 1; n <= 2 * M + 4; ++n)
        tail_max = std::max(tail_max, std::abs(selberg_fourier_coeff(delta, M, n)));

      const bool pass = min_gap >= -1e-10 && c0_err <= 1e-10 &&
                        coeff_slack <= 1e-10 && tail_max < 1e-8;
      all_pass = all_pass && pass;
      checks.push_back({M, delta, min_gap, c0_err, coeff_slack, tail_max, pass});
    }
  }

  if (o.format == "json") {
    Json root = Json::object();
    root.set("report", Json::string("majorant_check"));
    root.set("version", Json::string(std::string(kVersion)));
    root.set("M_max", Json::integer(m_max));
    root.set("grid_points", Json::integer(grid_points));
    root.set("random_points", Json::integer(random_points));
    root.set("seed", Json::uinteger(seed));
    Json arr = Json::array();
    for (const Check& c : checks) {
      Json jc = Json::object();
      jc.set("M", Json::integer(c.M));
      jc.set("delta", Json::number(c.delta));
      jc.set("min_gap", Json::number(c.min_gap));
      jc.set("c0_err", Json::number(c.c0_err));
      jc.set("coeff_slack", Json::number(c.coeff_slack));
      jc.set("tail_max", Json::number(c.tail_max));
      jc.set("pass", Json::boolean(c.pass));
      arr.push(std::move(jc));
    }
    root.set("checks", std::move(arr));
    root.set("all_pass", Json::boolean(all_pass));
    emit(o, root.dump());
  } else if (o.format == "csv") {
    std::string out = "M,delta,min_gap,c0_err,coeff_slack,tail_max,pass\n";
    for (const Check& c : checks) {
      out += std::to_string(c.M) + ',' + format_double(c.delta) + ',' +
             format_double(c.min_gap) + ',' + format_double(c.c0_err) + ',' +
             format_double(c.coeff_slack) + ',' + format_double(c.tail_max) +
             ',' + (c.pass ? "1" : "0") + '\n';
    }
    emit(o, out);
  } else {
    char buf[160];
    std::string out;
    for (const Check& c : checks) {
      std::snprintf(buf, sizeof buf,
                    "%s M=%-3d delta=%-12.6g min_gap=%- 12.3e c0_err=%.2e "
                    "coeff_slack=%.2e tail=%.2e\n",
                    c.pass ? "ok  " : "FAIL", c.M, c.delta, c.min_gap,
                    c.c0_err, c.coeff_slack, c.tail_max);
      out += buf;
    }
    out += all_pass ? "all majorant checks pass\n" : "MAJORANT CHECK FAILURE\n";
    emit(o, out);
  }

  if (!all_pass) {
    std::cerr << "error: a majorant invariant failed\n";
    return 2;
  }
  return 0;
}

// ---- bounds -------------------------------------------------------------------

int run_bounds(const std::string& theorem, const std::string& case_csv,
               const std::string& alpha_str, int kappa1, int kappa2,
               const CommonOpts& o) {
  if (theorem == "abstract") {
    const AbstractBounds ab = abstract_bounds();
    if (o.format == "json") {
      Json root = Json::object();
      root.set("report", Json::string("bounds"));
      root.set("version", Json::string(std::string(kVersion)));
      root.set("table", Json::string("abstract"));
      root.set("alpha_distinct", Json::number(ab.alpha_distinct));
      root.set("alpha_non_twist", Json::number(ab.alpha_non_twist));
      root.set("intersection_non_twist", Json::number(ab.intersection_non_twist));
      emit(o, root.dump());
    } else {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "alpha_distinct=%.17g (1/16)\nalpha_non_twist=%.17g "
                    "(2/13)\nintersection_non_twist=%.17g (1/11)\n",
                    ab.alpha_distinct, ab.alpha_non_twist,
                    ab.intersection_non_twist);
      emit(o, buf);
    }
    return 0;
  }

  BoundCase bc;
  if (theorem == "alpha-distinct")
    bc.table = BoundTableId::alpha_distinct;
  else if (theorem == "alpha-non-twist")
    bc.table = BoundTableId::alpha_non_twist;
  else if (theorem == "abs-set")
    bc.table = BoundTableId::abs_set;
  else if (theorem == "square-sum-set")
    bc.table = BoundTableId::square_sum_set;
  else
    throw ValidationError(
        "unknown table '" + theorem +
        "': expected alpha-distinct, alpha-non-twist, abs-set, "
        "square-sum-set, or abstract");

  if (!case_csv.empty()) {
    const std::vector<std::string> parts = split_top_level(case_csv);
    if (parts.size() != 2)
      throw ValidationError("--case expects two flags, e.g. dihedral,nondihedral");
    auto parse_flag = [](const std::string& tok) {
      const std::string t = trim(tok);
      if (t == "dihedral") return true;
      if (t == "nondihedral") return false;
      throw ValidationError("unknown type flag '" + t +
                            "': expected dihedral or nondihedral");
    };
    bc.dihedral1 = parse_flag(parts[0]);
    bc.dihedral2 = parse_flag(parts[1]);
  }
  if (!alpha_str.empty()) bc.alpha = parse_angle(alpha_str);
  bc.kappa1 = kappa1;
  bc.kappa2 = kappa2;

  const BoundValue bv = bound_table(bc);
  if (o.format == "json") {
    Json root = Json::object();
    root.set("report", Json::string("bounds"));
    root.set("version", Json::string(std::string(kVersion)));
    root.set("table", Json::string(theorem));
    Json jc = Json::object();
    jc.set("dihedral1", Json::boolean(bc.dihedral1));
    jc.set("dihedral2", Json::boolean(bc.dihedral2));
    jc.set("alpha", Json::number(bc.alpha));
    jc.set("kappa1", Json::integer(bc.kappa1));
    jc.set("kappa2", Json::integer(bc.kappa2));
    root.set("case", std::move(jc));
    root.set("expr", Json::string(bv.expr));
    root.set("value", Json::number(bv.value));
    emit(o, root.dump());
  } else {
    emit(o, bv.expr + " = " + format_double(bv.value) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongmult: eigenvalue coincidence counting and density "
               "estimation for GL(2) newform pairs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a sequence and write it in "
                                        "the exchange format");
  std::string gen_form;
  std::uint64_t gen_bound = 1000;
  CommonOpts gen_o;
  gen->add_option("--form", gen_form, "delta | e11 | cm32 | twist(<form>,<d>) | <file>")
      ->required();
  gen->add_option("--bound", gen_bound, "Largest prime to include")->required();
  add_common(gen, gen_o);

  // count
  auto* count = app.add_subcommand("count", "Coincidence counts, majorant "
                                            "bounds and shape ratios over a "
                                            "cutoff grid");
  std::string count_pair, count_grid = "1000,10000";
  CountParams count_params;
  CommonOpts count_o;
  count->add_option("--pair", count_pair, "Two form selectors, comma separated")
      ->required();
  count->add_option("--grid", count_grid, "Cutoffs, comma separated (1e4 ok)")
      ->capture_default_str();
  count->add_option("--M", count_params.M, "Majorant degree")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  count->add_option("--delta", count_params.delta,
                    "Majorant aperture in (0,1); 0 selects 1/(pi(M+1))")
      ->check(CLI::Range(0.0, 1.0));
  count->add_option("--m-max", count_params.m_max,
                    "Largest Chebyshev degree in the joint sums")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_common(count, count_o);

  // densities
  auto* dens = app.add_subcommand("densities", "Truncated Dirichlet density "
                                               "estimates for the coincidence "
                                               "sets");
  std::string dens_pair, dens_sets = "alpha=0,alpha=pi,abs,square_sum";
  std::string dens_sched;
  std::uint64_t dens_x = 100000;
  CommonOpts dens_o;
  dens->add_option("--pair", dens_pair, "Two form selectors, comma separated")
      ->required();
  dens->add_option("--x", dens_x, "Truncation cutoff")->capture_default_str();
  dens->add_option("--sets", dens_sets,
                   "Comma list of abs, square_sum, adjoint, alpha=<v>")
      ->capture_default_str();
  dens->add_option("--schedule", dens_sched,
                   "Comma list of s values in (1,2); default adds 1+3/log X");
  add_common(dens, dens_o);

  // sato-tate
  auto* st = app.add_subcommand("sato-tate", "Joint Chebyshev sums over the "
                                             "common support");
  std::string st_pair;
  std::uint64_t st_x = 100000;
  int st_m_max = 4;
  CommonOpts st_o;
  st->add_option("--pair", st_pair, "Two form selectors, comma separated")
      ->required();
  st->add_option("--x", st_x, "Cutoff")->capture_default_str();
  st->add_option("--m-max", st_m_max, "Largest degree")->capture_default_str();
  add_common(st, st_o);

  // majorant-check
  auto* mc = app.add_subcommand("majorant-check", "Verify the majorant and "
                                                  "Fourier coefficient "
                                                  "invariants over a degree "
                                                  "sweep");
  int mc_m_max = 24, mc_grid = 10000, mc_random = 1000;
  std::uint32_t mc_seed = 12345;
  std::string mc_deltas;
  CommonOpts mc_o;
  mc->add_option("--M-max", mc_m_max, "Sweep degrees 1..M-max")
      ->capture_default_str();
  mc->add_option("--deltas", mc_deltas,
                 "Comma list of apertures; default 1/(pi(M+1)),0.01,0.1");
  mc->add_option("--grid", mc_grid, "Equispaced sample points per period")
      ->capture_default_str();
  mc->add_option("--random", mc_random, "Extra pseudorandom sample points")
      ->capture_default_str();
  mc->add_option("--seed", mc_seed, "Seed for the pseudorandom samples")
      ->capture_default_str();
  add_common(mc, mc_o, false);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Print the reference lower-bound "
                                              "tables");
  std::string b_theorem, b_case, b_alpha;
  int b_kappa1 = -1, b_kappa2 = -1;
  CommonOpts b_o;
  bounds
      ->add_option("--theorem", b_theorem,
                   "alpha-distinct | alpha-non-twist | abs-set | "
                   "square-sum-set | abstract")
      ->required();
  bounds->add_option("--case", b_case, "Type flags: dihedral|nondihedral,x2");
  bounds->add_option("--alpha", b_alpha, "Rotation angle (real or pi)");
  bounds->add_option("--kappa1", b_kappa1,
                     "Cubic-twist flag (0/1); only for alpha-distinct with "
                     "both forms non-dihedral")
      ->check(CLI::Range(0, 1));
  bounds->add_option("--kappa2", b_kappa2,
                     "Equal-central-character flag (0/1); only for "
                     "alpha-non-twist with both forms non-dihedral")
      ->check(CLI::Range(0, 1));
  add_common(bounds, b_o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return run_gen(gen_form, gen_bound, gen_o);
    if (count->parsed())
      return run_count(count_pair, count_grid, count_params, count_o);
    if (dens->parsed())
      return run_densities(dens_pair, dens_x, dens_sets, dens_sched, dens_o);
    if (st->parsed()) return run_sato_tate(st_pair, st_x, st_m_max, st_o);
    if (mc->parsed())
      return run_majorant_check(mc_m_max, mc_deltas, mc_grid, mc_random,
                                mc_seed, mc_o);
    if (bounds->parsed())
      return run_bounds(b_theorem, b_case, b_alpha, b_kappa1, b_kappa2, b_o);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
