#pragma once

#include <gmpxx.h>

#include <string>

namespace wrlat {

// All exact arithmetic is carried by GMP: arbitrary-precision integers and
// canonical rationals (lowest terms, positive denominator).  No floating
// point is used anywhere in the exact layer.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den as a canonical rational.  den must be nonzero.
Rat make_rat(Int num, Int den);

/// Parses "p", "-p" or "p/q" (decimal digits, q > 0).  Throws ParseError.
Rat parse_rat(const std::string& s);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

/// floor(sqrt(x)) for x >= 0.
Int isqrt_floor(const Int& x);

/// floor(sqrt(r) + t) for rational r >= 0 and rational t, computed exactly:
/// an integer square root gives a window of width < 1, and the candidate is
/// settled by comparing (m+1-t)^2 against r.
Int floor_sqrt_plus(const Rat& r, const Rat& t);

/// ceil(t - sqrt(r)) for rational r >= 0, the lower mate of floor_sqrt_plus.
Int ceil_minus_sqrt_plus(const Rat& r, const Rat& t);

}  // namespace wrlat
