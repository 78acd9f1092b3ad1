#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qwz {

// mpq_class keeps values canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_pq_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace qwz
