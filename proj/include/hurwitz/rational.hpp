#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q" (optional sign on p); returns false on malformed input
/// or a zero denominator.
bool parse_rational(std::string_view text, Rational& out);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }

/// Largest multiple of 2^-bits not exceeding x.
Rational round_dyadic(const Rational& x, unsigned bits);

Rational from_double(double x);

}  // namespace hurwitz
