#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pointsep {

/// Exact arbitrary-precision rational. All geometric predicates are decided
/// over this type; no floating-point sign decisions anywhere.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

/// Parse a finite decimal ("-12.375", "3", "2.5e-2") or a fraction "p/q"
/// into an exact rational. Throws SchemaError on malformed input.
Rational rational_from_string(std::string_view text);

/// Exact textual form: a finite decimal when the denominator is 2^a*5^b,
/// otherwise "p/q". rational_from_string round-trips both.
std::string rational_to_string(const Rational& q);

/// True when rational_to_string would emit a plain decimal.
bool has_finite_decimal(const Rational& q);

Rational floor_rational(const Rational& q);
Rational ceil_rational(const Rational& q);

/// Largest integer <= q, as int64 (values at instance scale only).
std::int64_t floor_to_int(const Rational& q);

/// Smallest integer k >= alpha * sqrt(n), computed exactly. alpha > 0, n >= 0.
std::int64_t ceil_alpha_sqrt(const Rational& alpha, std::int64_t n);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace pointsep
