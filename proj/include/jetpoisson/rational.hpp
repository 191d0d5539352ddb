#pragma once

#include <gmpxx.h>

#include <string>

namespace jetpoisson {

// Exact arbitrary-precision rational coefficients.  GMP keeps values
// canonical (reduced, positive denominator) through arithmetic.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// num/den given as decimal digit strings (den defaults to "1").
Rational rational_from_digits(const std::string& num, const std::string& den);

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_one(const Rational& r) { return r == 1; }
inline bool is_minus_one(const Rational& r) { return r == -1; }

}  // namespace jetpoisson
