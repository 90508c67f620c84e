#include "strongmult/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "strongmult/version.hpp"

namespace strongmult {

std::string format_double(double v) {
  if (!std::isfinite(v))
    throw InvariantFailure("non-finite value reached a report");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json Json::boolean(bool b) {
  Json j;
  j.value_ = b;
  return j;
}
Json Json::integer(std::int64_t v) {
  Json j;
  j.value_ = v;
  return j;
}
Json Json::uinteger(std::uint64_t v) {
  Json j;
  j.value_ = v;
  return j;
}
Json Json::number(double v) {
  format_double(v);  // reject non-finite early, at insertion
  Json j;
  j.value_ = v;
  return j;
}
Json Json::string(std::string v) {
  Json j;
  j.value_ = std::move(v);
  return j;
}
Json Json::array() {
  Json j;
  j.value_ = Array{};
  return j;
}
Json Json::object() {
  Json j;
  j.value_ = Object{};
  return j;
}

Json& Json::set(std::string key, Json v) {
  if (!std::holds_alternative<Object>(value_))
    throw InvariantFailure("set() on a non-object json value");
  std::get<Object>(value_).push_back({std::move(key), std::move(v)});
  return *this;
}

Json& Json::push(Json v) {
  if (!std::holds_alternative<Array>(value_))
    throw InvariantFailure("push() on a non-array json value");
  std::get<Array>(value_).push_back(std::move(v));
  return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (const char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x",
                        static_cast<unsigned>(static_cast<unsigned char>(ch)));
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

void pad(std::string& out, int indent, int depth) {
  out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

}  // namespace

void Json::write(std::string& out, int indent, int depth) const {
  if (std::holds_alternative<std::nullptr_t>(value_)) {
    out += "null";
  } else if (std::holds_alternative<bool>(value_)) {
    out += std::get<bool>(value_) ? "true" : "false";
  } else if (std::holds_alternative<std::int64_t>(value_)) {
    out += std::to_string(std::get<std::int64_t>(value_));
  } else if (std::holds_alternative<std::uint64_t>(value_)) {
    out += std::to_string(std::get<std::uint64_t>(value_));
  } else if (std::holds_alternative<double>(value_)) {
    out += format_double(std::get<double>(value_));
  } else if (std::holds_alternative<std::string>(value_)) {
    write_escaped(out, std::get<std::string>(value_));
  } else if (std::holds_alternative<Array>(value_)) {
    const Array& a = std::get<Array>(value_);
    if (a.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < a.size(); ++i) {
      pad(out, indent, depth + 1);
      a[i].write(out, indent, depth + 1);
      out += (i + 1 < a.size()) ? ",\n" : "\n";
    }
    pad(out, indent, depth);
    out += ']';
  } else {
    const Object& o = std::get<Object>(value_);
    if (o.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    for (std::size_t i = 0; i < o.size(); ++i) {
      pad(out, indent, depth + 1);
      write_escaped(out, o[i].key);
      out += ": ";
      o[i].value.write(out, indent, depth + 1);
      out += (i + 1 < o.size()) ? ",\n" : "\n";
    }
    pad(out, indent, depth);
    out += '}';
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

Json descriptor_json(const FormDescriptor& d) {
  Json j = Json::object();
  j.set("label", Json::string(d.label));
  j.set("weight", Json::integer(d.weight));
  j.set("level", Json::uinteger(d.level));
  j.set("cm", Json::boolean(d.cm));
  j.set("source", Json::string(d.source));
  return j;
}

Json count_report_json(const CountReport& r) {
  Json root = Json::object();
  root.set("report", Json::string("count"));
  root.set("version", Json::string(std::string(kVersion)));
  root.set("f1", descriptor_json(r.f1));
  root.set("f2", descriptor_json(r.f2));
  Json params = Json::object();
  params.set("M", Json::integer(r.params.M));
  params.set("delta", Json::number(r.params.delta));
  params.set("m_max", Json::integer(r.params.m_max));
  root.set("params", std::move(params));
  root.set("Q", Json::number(r.Q));

  Json rows = Json::array();
  for (const CountRow& row : r.rows) {
    Json jr = Json::object();
    jr.set("x", Json::uinteger(row.x));
    jr.set("pi_x", Json::uinteger(row.pi_x));
    jr.set("n_square_equal", Json::uinteger(row.n_square_equal));
    jr.set("n_angle_equal", Json::uinteger(row.n_angle_equal));
    jr.set("n_angle_flip", Json::uinteger(row.n_angle_flip));
    jr.set("n_both_zero", Json::uinteger(row.n_both_zero));
    jr.set("majorant_rhs_plus", Json::number(row.majorant_rhs_plus));
    jr.set("majorant_rhs_minus", Json::number(row.majorant_rhs_minus));
    jr.set("bound_shape_uncond", Json::number(row.bound_shape_uncond));
    jr.set("bound_shape_grh", Json::number(row.bound_shape_grh));
    Json st = Json::array();
    for (const SatoTateEntry& e : row.sato_tate) {
      Json je = Json::object();
      je.set("m1", Json::integer(e.m1));
      je.set("m2", Json::integer(e.m2));
      je.set("sum", Json::number(e.sum));
      st.push(std::move(je));
    }
    jr.set("sato_tate", std::move(st));
    rows.push(std::move(jr));
  }
  root.set("rows", std::move(rows));

  Json invs = Json::array();
  for (const InvariantResult& inv : r.invariants) {
    Json ji = Json::object();
    ji.set("name", Json::string(inv.name));
    ji.set("x", Json::uinteger(inv.x));
    ji.set("pass", Json::boolean(inv.pass));
    ji.set("lhs", Json::number(inv.lhs));
    ji.set("rhs", Json::number(inv.rhs));
    invs.push(std::move(ji));
  }
  root.set("invariants", std::move(invs));
  root.set("all_pass", Json::boolean(r.all_pass));
  return root;
}

std::string count_report_csv(const CountReport& r) {
  std::string out =
      "x,pi_x,n_square_equal,n_angle_equal,n_angle_flip,n_both_zero,"
      "majorant_rhs_plus,majorant_rhs_minus,bound_shape_uncond,bound_shape_grh";
  for (int m1 = 1; m1 <= r.params.m_max; ++m1)
    for (int m2 = 1; m2 <= r.params.m_max; ++m2)
      out += ",st_" + std::to_string(m1) + "_" + std::to_string(m2);
  out += '\n';
  for (const CountRow& row : r.rows) {
    out += std::to_string(row.x);
    out += ',' + std::to_string(row.pi_x);
    out += ',' + std::to_string(row.n_square_equal);
    out += ',' + std::to_string(row.n_angle_equal);
    out += ',' + std::to_string(row.n_angle_flip);
    out += ',' + std::to_string(row.n_both_zero);
    out += ',' + format_double(row.majorant_rhs_plus);
    out += ',' + format_double(row.majorant_rhs_minus);
    out += ',' + format_double(row.bound_shape_uncond);
    out += ',' + format_double(row.bound_shape_grh);
    for (const SatoTateEntry& e : row.sato_tate)
      out += ',' + format_double(e.sum);
    out += '\n';
  }
  return out;
}

std::string count_report_table(const CountReport& r) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf, "pair: %s  x  %s   (M=%d, delta=%.6g, Q=%g)\n",
                r.f1.label.c_str(), r.f2.label.c_str(), r.params.M,
                r.params.delta, r.Q);
  out += buf;
  std::snprintf(buf, sizeof buf, "%10s %10s %8s %8s %8s %8s %12s %12s\n", "x",
                "pi_x", "sq_eq", "eq", "flip", "zeros", "rhs_plus",
                "rhs_minus");
  out += buf;
  for (const CountRow& row : r.rows) {
    std::snprintf(buf, sizeof buf,
                  "%10llu %10llu %8llu %8llu %8llu %8llu %12.4f %12.4f\n",
                  static_cast<unsigned long long>(row.x),
                  static_cast<unsigned long long>(row.pi_x),
                  static_cast<unsigned long long>(row.n_square_equal),
                  static_cast<unsigned long long>(row.n_angle_equal),
                  static_cast<unsigned long long>(row.n_angle_flip),
                  static_cast<unsigned long long>(row.n_both_zero),
                  row.majorant_rhs_plus, row.majorant_rhs_minus);
    out += buf;
  }
  for (const InvariantResult& inv : r.invariants) {
    std::snprintf(buf, sizeof buf, "%s %-28s x=%llu lhs=%.10g rhs=%.10g\n",
                  inv.pass ? "ok  " : "FAIL", inv.name.c_str(),
                  static_cast<unsigned long long>(inv.x), inv.lhs, inv.rhs);
    out += buf;
  }
  out += r.all_pass ? "all invariants pass\n" : "INVARIANT FAILURE\n";
  return out;
}

namespace {

Json estimate_json(const DensityEstimate& e) {
  Json je = Json::object();
  je.set("set", Json::string(set_kind_name(e.selector.kind)));
  je.set("alpha", Json::number(e.selector.alpha));
  je.set("truncation", Json::uinteger(e.truncation));
  je.set("members", Json::uinteger(e.members));
  Json rows = Json::array();
  for (const DensityRow& row : e.rows) {
    Json jr = Json::object();
    jr.set("s", Json::number(row.s));
    jr.set("numerator", Json::number(row.numerator));
    jr.set("denominator", Json::number(row.denominator));
    jr.set("ratio", Json::number(row.ratio));
    jr.set("tail_bound", Json::number(row.tail_bound));
    rows.push(std::move(jr));
  }
  je.set("rows", std::move(rows));
  return je;
}

}  // namespace

Json density_report_json(const FormDescriptor& f1, const FormDescriptor& f2,
                         const std::vector<DensityEstimate>& estimates) {
  Json root = Json::object();
  root.set("report", Json::string("densities"));
  root.set("version", Json::string(std::string(kVersion)));
  root.set("f1", descriptor_json(f1));
  root.set("f2", descriptor_json(f2));
  const AbstractBounds ab = abstract_bounds();
  Json ref = Json::object();
  ref.set("alpha_distinct_worst", Json::number(ab.alpha_distinct));
  ref.set("alpha_non_twist_worst", Json::number(ab.alpha_non_twist));
  ref.set("intersection_non_twist", Json::number(ab.intersection_non_twist));
  root.set("reference_bounds", std::move(ref));
  Json arr = Json::array();
  for (const DensityEstimate& e : estimates) arr.push(estimate_json(e));
  root.set("estimates", std::move(arr));
  return root;
}

std::string density_report_csv(const std::vector<DensityEstimate>& estimates) {
  std::string out =
      "set,alpha,truncation,members,s,numerator,denominator,ratio,tail_bound\n";
  for (const DensityEstimate& e : estimates) {
    for (const DensityRow& row : e.rows) {
      out += set_kind_name(e.selector.kind);
      out += ',' + format_double(e.selector.alpha);
      out += ',' + std::to_string(e.truncation);
      out += ',' + std::to_string(e.members);
      out += ',' + format_double(row.s);
      out += ',' + format_double(row.numerator);
      out += ',' + format_double(row.denominator);
      out += ',' + format_double(row.ratio);
      out += ',' + format_double(row.tail_bound);
      out += '\n';
    }
  }
  return out;
}

std::string density_report_table(
    const std::vector<DensityEstimate>& estimates) {
  char buf[256];
  std::string out;
  for (const DensityEstimate& e : estimates) {
    std::snprintf(buf, sizeof buf, "set=%s alpha=%.6g X=%llu members=%llu\n",
                  set_kind_name(e.selector.kind), e.selector.alpha,
                  static_cast<unsigned long long>(e.truncation),
                  static_cast<unsigned long long>(e.members));
    out += buf;
    for (const DensityRow& row : e.rows) {
      std::snprintf(buf, sizeof buf,
                    "  s=%-10.8g ratio=%-12.8g num=%-12.8g den=%-12.8g "
                    "tail<=%.3g\n",
                    row.s, row.ratio, row.numerator, row.denominator,
                    row.tail_bound);
      out += buf;
    }
  }
  return out;
}

}  // namespace strongmult
