#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace inhomcs {

using Rational = mpq_class;

// "p/q" in lowest terms; integers are printed without a denominator.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace inhomcs
