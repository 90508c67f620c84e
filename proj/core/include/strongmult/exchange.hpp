#pragma once

#include <iosfwd>
#include <string>

#include "strongmult/forms.hpp"

namespace strongmult {

// Plain text exchange format, one sequence per file:
//   # label=<s> weight=<k> level=<q> cm=<0|1>
//   <p>,<a_p>        (ascending primes, unbounded base-10 integers)
// Writing then reading then writing again is byte identical.
void save_sequence(const EigenSequence& seq, std::ostream& out);
void save_sequence_file(const EigenSequence& seq, const std::string& path);

EigenSequence load_sequence(std::istream& in);
EigenSequence load_sequence_file(const std::string& path);

}  // namespace strongmult
