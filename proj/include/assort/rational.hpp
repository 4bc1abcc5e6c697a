#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace assort {

// Exact arithmetic carrier for every quantity in the library. Values are
// arbitrary-precision rationals kept in lowest terms with a positive
// denominator; arithmetic and comparisons are exact, nothing is ever rounded.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" (both plain integers, q > 0 after sign normalization), a bare
// integer, or a decimal string such as "1.5" or "0.125". Decimal strings are
// scaled by a power of ten, so parsing never goes through binary floating
// point. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

// Lowest-terms "p/q"; integers render without the "/q" part.
std::string to_fraction_string(const Rational& value);

// Decimal approximation with up to `significant` significant digits
// (trailing zeros trimmed). Advisory only; the fraction string is the
// authoritative representation.
std::string to_decimal_string(const Rational& value, unsigned significant = 15);

} // namespace assort
