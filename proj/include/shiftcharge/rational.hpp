#pragma once

#include <gmpxx.h>

#include <string>

namespace shiftcharge {

// All arithmetic in this library is exact. Rat is a canonical arbitrary
// precision rational (denominator > 0, gcd(num, den) = 1).
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p/q", an integer string, or an exact decimal string ("0.5",
// "-1.25"). Decimals become fractions over powers of ten and are then
// canonicalized. Throws std::invalid_argument on malformed input or a zero
// denominator.
Rat rat_from_string(const std::string& text);

// Canonical "num/den" form, denominator always spelled out ("3/1", "-1/2").
// Used everywhere a rational leaves the process, so output is byte-stable.
std::string rat_to_string(const Rat& value);

// x^n with the convention 0^0 = 1.
Rat rat_pow(const Rat& x, unsigned long n);

// -1, 0, or +1.
int rat_sign(const Rat& value);

Rat rat_abs(const Rat& value);

}  // namespace shiftcharge
