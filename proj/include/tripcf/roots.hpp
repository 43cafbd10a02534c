#pragma once

#include "tripcf/poly.hpp"
#include "tripcf/rational.hpp"

#include <vector>

namespace tripcf {

/// Open interval (lo, hi) containing exactly one real root of some polynomial;
/// the polynomial has opposite (nonzero) signs at the endpoints.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
    bool operator==(const IsolatingInterval& o) const { return lo == o.lo && hi == o.hi; }
};

/// Sturm chain of p (p assumed squarefree for root counting).
std::vector<PolyQ> sturm_chain(const PolyQ& p);

int sign_variations_at(const std::vector<PolyQ>& chain, const Rational& t);

/// Number of distinct real roots of squarefree p in (a, b); requires
/// p(a) != 0 and p(b) != 0.
int sturm_count(const PolyQ& p, const Rational& a, const Rational& b);

/// 1 + max |a_i / a_n|; every real root lies strictly inside (-bound, bound).
Rational cauchy_root_bound(const PolyQ& p);

/// Isolating intervals for all real roots, in increasing order.
/// Throws NotSquarefree when gcd(p, p') is nonconstant.
std::vector<IsolatingInterval> isolate_real_roots(const PolyQ& p);

/// Bisects until the interval is no wider than `width`; sign invariants are
/// preserved (the root never lands on an endpoint).
IsolatingInterval refine(IsolatingInterval iv, const PolyQ& p, const Rational& width);

} // namespace tripcf
