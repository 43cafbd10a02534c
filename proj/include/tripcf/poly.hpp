#pragma once

#include "tripcf/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tripcf {

/// Univariate polynomial over Q. Coefficients are stored lowest degree first
/// and trailing zeros are stripped, so equal polynomials compare equal.
class PolyQ {
public:
    PolyQ() = default; // the zero polynomial
    explicit PolyQ(std::vector<Rational> coeffs);

    static PolyQ constant(const Rational& c);
    static PolyQ x();
    /// x^3 + a*x^2 + b*x + c
    static PolyQ monic_cubic(const Rational& a, const Rational& b, const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const;
    const Rational& lead() const;
    bool is_monic() const;
    bool has_integer_coeffs() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& t) const;
    int sign_at(const Rational& t) const { return sign(eval(t)); }
    PolyQ derivative() const;
    PolyQ monic() const;

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rational& s) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    /// Rendered like "x^3-11x^2+23x-1".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws DivByZero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

/// Monic gcd; gcd(0,0) = 0.
PolyQ poly_gcd(PolyQ a, PolyQ b);

bool is_squarefree(const PolyQ& p);

/// Discriminant of a degree-3 polynomial (any leading coefficient).
Rational discriminant(const PolyQ& p);

/// Rational-root test for a monic integer cubic: reducible over Q iff it has
/// an integer root dividing the constant term.
bool is_irreducible_cubic(const PolyQ& p);

/// Accepts "a,b,c" (meaning x^3+a*x^2+b*x+c), "1,a,b,c", or display text such
/// as "x^3+2x^2+3x-1". Result always has degree exactly 3.
PolyQ parse_cubic(std::string_view text);

/// General display-text parser ("2x^2-1/2x+4"); used by parse_cubic.
PolyQ parse_poly(std::string_view text);

} // namespace tripcf
