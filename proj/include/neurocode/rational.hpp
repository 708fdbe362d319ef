#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace neurocode {

// All geometry in this library runs on exact rationals; floating point is
// confined to the SVG coordinate emission in svg.hpp.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" (optional leading '-'); q must be nonzero.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

}  // namespace neurocode
