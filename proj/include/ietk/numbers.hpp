#ifndef IETK_NUMBERS_HPP
#define IETK_NUMBERS_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ietk/error.hpp"

namespace ietk {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, kept reduced with positive denominator
/// (mpq canonical form matches that contract).
using Rational = mpq_class;

/// num/den with den != 0, canonicalized.
Rational make_rational(const Int& num, const Int& den);

inline Rational make_rational(long num, long den = 1) { return make_rational(Int(num), Int(den)); }

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Int& n) { return sgn(n); }

/// Largest integer <= q.
Int rat_floor(const Rational& q);
/// Smallest integer >= q.
Int rat_ceil(const Rational& q);

bool is_integer(const Rational& q);

/// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
Rational parse_rational(std::string_view text);

/// "p" or "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

double to_double(const Rational& q);

} // namespace ietk

#endif
