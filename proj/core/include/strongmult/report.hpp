#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "strongmult/counting.hpp"
#include "strongmult/density.hpp"

namespace strongmult {

// %.17g: enough digits to round-trip a double, fixed so that identical runs
// serialize byte-identically. Rejects NaN and infinities.
std::string format_double(double v);

// Minimal JSON value with insertion-ordered object keys and format_double for
// every floating point literal. Deliberately hand-rolled: determinism of the
// byte stream is part of the report contract.
class Json {
 public:
  Json() : value_(nullptr) {}

  static Json boolean(bool b);
  static Json integer(std::int64_t v);
  static Json uinteger(std::uint64_t v);
  static Json number(double v);
  static Json string(std::string v);
  static Json array();
  static Json object();

  // Appends; keys are emitted in insertion order.
  Json& set(std::string key, Json v);
  Json& push(Json v);

  std::string dump(int indent = 2) const;

 private:
  struct Member;
  using Array = std::vector<Json>;
  using Object = std::vector<Member>;
  std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, double,
               std::string, Array, Object>
      value_;
  void write(std::string& out, int indent, int depth) const;
};

struct Json::Member {
  std::string key;
  Json value;
};

Json descriptor_json(const FormDescriptor& d);

Json count_report_json(const CountReport& r);
std::string count_report_csv(const CountReport& r);
std::string count_report_table(const CountReport& r);

Json density_report_json(const FormDescriptor& f1, const FormDescriptor& f2,
                         const std::vector<DensityEstimate>& estimates);
std::string density_report_csv(const std::vector<DensityEstimate>& estimates);
std::string density_report_table(const std::vector<DensityEstimate>& estimates);

}  // namespace strongmult
