#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tripcf {

// Exact arithmetic scalars. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the BigRational contract.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "num", "num/den" or a decimal-free integer string. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

} // namespace tripcf
