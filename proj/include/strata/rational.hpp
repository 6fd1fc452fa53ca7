#ifndef STRATA_RATIONAL_HPP
#define STRATA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace strata {

// Exact scalars.  Every computation in the library is exact; floating point
// is not used anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// Exact construction from machine integers (mpq_class lacks a long long
/// overload; entries are small enough that long is always exact here).
inline Rat rat(long long num) { return Rat(static_cast<long>(num)); }
inline Rat rat(long long num, long long den) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

/// Parse a rational literal: "p/q" with q != 0, or the integer shorthand
/// "p".  The result is canonical (lowest terms, positive denominator).
/// Throws ParseError on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical literal: "p/q" with gcd(p,q)=1 and q>0, or "p" when q=1.
std::string to_string(const Rat& x);

/// Exact conversion to long; throws ShapeError if x is not an integer that
/// fits.
long to_long(const Rat& x);

} // namespace strata

#endif
