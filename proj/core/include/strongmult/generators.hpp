#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "strongmult/forms.hpp"

namespace strongmult {

// Hard ceiling for every built-in generator. Runs past kGeneratorWarnBound
// are legal but slow; the driver warns about them.
inline constexpr std::uint64_t kGeneratorLimit = 1000000;
inline constexpr std::uint64_t kGeneratorWarnBound = 100000;

// tau(1), ..., tau(bound): coefficients of the weight 12 level 1 cusp form,
// computed by sparse eta-power series multiplication modulo several 31-bit
// primes and recombined by CRT. The modulus product always exceeds
// 8 * bound^(11/2), which certifies the signed reconstruction.
std::vector<mpz_class> tau_coefficients(std::uint64_t bound);

// Weight 12, level 1, label "delta".
EigenSequence tau_sequence(std::uint64_t bound);

// Weight 2, level 11, label "e11": trace of Frobenius of
// y^2 + y = x^3 - x^2 - 10x - 20. p = 11 is ramified; p = 2 is counted by
// direct enumeration; odd p by summing quadratic characters of the
// completed-square cubic 4x^3 - 4x^2 - 40x - 79.
EigenSequence e11_sequence(std::uint64_t bound);

// Weight 2, level 32, CM, label "cm32": trace of Frobenius of y^2 = x^3 - x.
// a_p = 0 for p = 3 mod 4; for p = 1 mod 4, p = a^2 + b^2 with a odd,
// b >= 0 even, a + b = 1 mod 4, and a_p = 2a.
EigenSequence cm32_sequence(std::uint64_t bound);

}  // namespace strongmult
