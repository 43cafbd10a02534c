#pragma once

#include "tripcf/poly.hpp"
#include "tripcf/rational.hpp"
#include "tripcf/roots.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace tripcf {

/// A real cubic number field Q(u) presented by a monic irreducible integer
/// cubic together with an isolating interval selecting which real root u is.
/// The interval is refined lazily (and thread-safely) as comparisons demand.
class CubicField {
public:
    /// Validates: degree 3, monic, integer coefficients, irreducible, and the
    /// interval isolates exactly one root (endpoints are not roots).
    static std::shared_ptr<const CubicField> make(PolyQ minPoly, IsolatingInterval iv);

    const PolyQ& min_poly() const { return minPoly_; }
    Rational discriminant() const { return disc_; }

    /// Snapshot of the current isolating interval.
    IsolatingInterval interval() const;

    /// Halves the width of the stored isolating interval.
    void refine_once() const;

    /// Refines the stored interval until its width is at most `width`.
    IsolatingInterval refine_to(const Rational& width) const;

private:
    CubicField(PolyQ minPoly, IsolatingInterval iv, Rational disc);

    PolyQ minPoly_;
    Rational disc_;
    mutable std::mutex mu_;
    mutable IsolatingInterval iv_;
};

using FieldPtr = std::shared_ptr<const CubicField>;

/// All roots of the given monic irreducible integer cubic lying in (0, 1),
/// in increasing order, each wrapped as a field selecting that root.
/// Throws Reducible when the cubic factors over Q.
std::vector<FieldPtr> fields_in_unit_interval(const PolyQ& p);

/// An element c0 + c1*u + c2*u^2 of a cubic field, or a plain rational when
/// the field pointer is null. Elements with zero u and u^2 coordinates are
/// normalized to the rational form, so equality is componentwise.
class FieldElement {
public:
    FieldElement() : c_{Rational(0), Rational(0), Rational(0)} {}
    FieldElement(const Rational& r) : c_{r, Rational(0), Rational(0)} {}
    FieldElement(long n) : FieldElement(Rational(n)) {}

    static FieldElement algebraic(FieldPtr field, Rational c0, Rational c1, Rational c2);
    /// The distinguished root u itself.
    static FieldElement generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const std::array<Rational, 3>& coeffs() const { return c_; }

    bool is_rational() const { return field_ == nullptr; }
    bool is_zero() const;
    /// Throws FieldMismatch when the element is not rational.
    Rational rational_value() const;

    /// Reinterprets the element inside `field` (only valid for rationals or
    /// elements already of that field).
    FieldElement promote(const FieldPtr& field) const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldElement(FieldPtr field, std::array<Rational, 3> c);
    static FieldPtr join_fields(const FieldElement& a, const FieldElement& b);

    FieldPtr field_; // null => plain rational (c1 = c2 = 0)
    std::array<Rational, 3> c_;
};

/// Exact sign (-1, 0, +1), decided by refining the field interval as needed.
int sign_of(const FieldElement& e);

inline bool operator<(const FieldElement& a, const FieldElement& b) { return sign_of(a - b) < 0; }
inline bool operator<=(const FieldElement& a, const FieldElement& b) { return sign_of(a - b) <= 0; }
inline bool operator>(const FieldElement& a, const FieldElement& b) { return sign_of(a - b) > 0; }
inline bool operator>=(const FieldElement& a, const FieldElement& b) { return sign_of(a - b) >= 0; }

/// Largest integer n with n <= e.
Integer floor_of(const FieldElement& e);

/// floor(num / den); throws DivByZero when den == 0.
Integer floor_ratio(const FieldElement& num, const FieldElement& den);

/// Monic minimal polynomial over Q: degree 1 for rationals, degree 3 for
/// every other element of a cubic field.
PolyQ minimal_polynomial(const FieldElement& e);

/// Double approximation (refines the field interval to ~2^-60 first).
double approx(const FieldElement& e);

} // namespace tripcf
