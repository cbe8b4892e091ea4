#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adjlab {

/// Exact rational number; always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "3", "-5/2". Matches the literal grammar accepted by parse_poly.
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" with an optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Identifier of the arbitrary-precision backend, e.g. "gmp-6.2.1".
std::string arithmetic_backend();

}  // namespace adjlab
