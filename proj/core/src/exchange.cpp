#include "strongmult/exchange.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "strongmult/primes.hpp"

namespace strongmult {

void save_sequence(const EigenSequence& seq, std::ostream& out) {
  const FormDescriptor& d = seq.descriptor();
  out << "# label=" << d.label << " weight=" << d.weight
      << " level=" << d.level << " cm=" << (d.cm ? 1 : 0) << "\n";
  for (const PrimeEntry& e : seq.entries())
    out << e.p << "," << e.a.get_str() << "\n";
}

void save_sequence_file(const EigenSequence& seq, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  save_sequence(seq, out);
  if (!out) throw ValidationError("write failed: " + path);
}

namespace {

// "key=value" with the expected key, or a parse failure.
std::string expect_kv(const std::string& tok, const char* key,
                      std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw parse_error(line, "malformed header: expected " + prefix +
                                "..., got '" + tok + "'");
  return tok.substr(prefix.size());
}

long long parse_ll(const std::string& s, const char* what, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw parse_error(line, std::string("malformed ") + what + ": '" + s + "'");
  return v;
}

}  // namespace

EigenSequence load_sequence(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw parse_error(1, "missing header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::istringstream hs(line);
  std::string hash, ltok, wtok, qtok, ctok, extra;
  hs >> hash >> ltok >> wtok >> qtok >> ctok;
  if (hash != "#" || !hs || (hs >> extra))
    throw parse_error(1, "malformed header: want '# label=<s> weight=<k> "
                         "level=<q> cm=<0|1>'");
  FormDescriptor desc;
  desc.label = expect_kv(ltok, "label", 1);
  desc.weight = static_cast<int>(parse_ll(expect_kv(wtok, "weight", 1), "weight", 1));
  const long long level = parse_ll(expect_kv(qtok, "level", 1), "level", 1);
  if (level < 1) throw parse_error(1, "level must be >= 1");
  desc.level = static_cast<std::uint64_t>(level);
  const long long cm = parse_ll(expect_kv(ctok, "cm", 1), "cm", 1);
  if (cm != 0 && cm != 1) throw parse_error(1, "cm flag must be 0 or 1");
  desc.cm = cm == 1;
  desc.source = "file";
  if (desc.label.empty()) throw parse_error(1, "label must be non-empty");
  if (desc.weight < 2 || desc.weight % 2 != 0)
    throw parse_error(1, "weight must be a positive even integer");

  std::vector<PrimeEntry> entries;
  std::uint64_t prev = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw parse_error(lineno, "blank row");
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw parse_error(lineno, "malformed row: expected '<p>,<a_p>'");
    const std::string ptok = line.substr(0, comma);
    const std::string atok = line.substr(comma + 1);

    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(ptok.data(), ptok.data() + ptok.size(), p);
    if (ec != std::errc() || ptr != ptok.data() + ptok.size())
      throw parse_error(lineno, "malformed prime index: '" + ptok + "'");
    if (!is_prime(p))
      throw parse_error(lineno, "non-prime index " + std::to_string(p));
    if (desc.level % p == 0)
      throw parse_error(lineno, "entry for ramified prime " + std::to_string(p));
    if (p == prev)
      throw parse_error(lineno, "duplicate prime " + std::to_string(p));
    if (p < prev)
      throw parse_error(lineno, "primes out of order at " + std::to_string(p));
    prev = p;

    mpz_class a;
    if (atok.empty() || mpz_set_str(a.get_mpz_t(), atok.c_str(), 10) != 0)
      throw parse_error(lineno, "malformed eigenvalue: '" + atok + "'");

    // The Deligne bound is also enforced by the sequence constructor; checking
    // here attaches the offending line number.
    mpz_class cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), p, static_cast<unsigned long>(desc.weight - 1));
    cap *= 4;
    if (a * a > cap)
      throw parse_error(lineno, "Deligne bound violated at prime " +
                                    std::to_string(p));
    entries.push_back({p, std::move(a)});
  }

  const std::uint64_t bound = entries.empty() ? 1 : entries.back().p;
  return EigenSequence(std::move(desc), bound, std::move(entries));
}

EigenSequence load_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open for reading: " + path);
  return load_sequence(in);
}

}  // namespace strongmult
