#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace mmt {

/// Exact rational number with arbitrary-precision numerator and
/// denominator, always kept in canonical form.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading '-', base 10). Throws ParseError
/// on anything else, including q = 0.
Rational parse_rational(const std::string& text);

/// Canonical text form, "p" or "p/q".
std::string rational_to_string(const Rational& q);

bool is_integer(const Rational& q);

/// q^e for e >= 0.
Rational rational_pow(const Rational& q, unsigned long e);

/// Exact m-th root of a positive rational, if one exists.
std::optional<Rational> exact_rational_root(const Rational& q, unsigned long m);

} // namespace mmt
