#include "tripcf/field.hpp"

#include "tripcf/errors.hpp"

#include <sstream>
#include <utility>

namespace tripcf {

// ---------------------------------------------------------------------------
// CubicField

CubicField::CubicField(PolyQ minPoly, IsolatingInterval iv, Rational disc)
    : minPoly_(std::move(minPoly)), disc_(std::move(disc)), iv_(std::move(iv)) {}

std::shared_ptr<const CubicField> CubicField::make(PolyQ minPoly, IsolatingInterval iv) {
    if (minPoly.degree() != 3) throw Error("CubicField: polynomial must have degree 3");
    if (!minPoly.is_monic()) throw Error("CubicField: polynomial must be monic");
    if (!minPoly.has_integer_coeffs()) throw Error("CubicField: polynomial must have integer coefficients");
    if (!is_irreducible_cubic(minPoly))
        throw Reducible("CubicField: " + minPoly.str() + " factors over Q");
    if (!(iv.lo < iv.hi)) throw Error("CubicField: empty isolating interval");
    if (sturm_count(minPoly, iv.lo, iv.hi) != 1)
        throw Error("CubicField: interval does not isolate exactly one root of " + minPoly.str());
    Rational disc = tripcf::discriminant(minPoly);
    return std::shared_ptr<const CubicField>(
        new CubicField(std::move(minPoly), std::move(iv), std::move(disc)));
}

IsolatingInterval CubicField::interval() const {
    std::lock_guard<std::mutex> lock(mu_);
    return iv_;
}

void CubicField::refine_once() const {
    std::lock_guard<std::mutex> lock(mu_);
    iv_ = refine(iv_, minPoly_, iv_.width() / 2);
}

IsolatingInterval CubicField::refine_to(const Rational& width) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (iv_.width() > width) iv_ = refine(iv_, minPoly_, width);
    return iv_;
}

std::vector<FieldPtr> fields_in_unit_interval(const PolyQ& p) {
    if (p.degree() != 3 || !p.is_monic() || !p.has_integer_coeffs())
        throw Error("fields_in_unit_interval: expected a monic integer cubic, got " + p.str());
    if (!is_irreducible_cubic(p)) throw Reducible(p.str() + " factors over Q");
    std::vector<FieldPtr> out;
    for (IsolatingInterval iv : isolate_real_roots(p)) {
        for (;;) {
            if (iv.hi <= 0 || iv.lo >= 1) break; // root outside (0,1)
            if (iv.lo >= 0 && iv.hi <= 1) {
                out.push_back(CubicField::make(p, iv));
                break;
            }
            iv = refine(iv, p, iv.width() / 2);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, std::array<Rational, 3> c)
    : field_(std::move(field)), c_(std::move(c)) {
    if (c_[1] == 0 && c_[2] == 0) field_ = nullptr;
}

FieldElement FieldElement::algebraic(FieldPtr field, Rational c0, Rational c1, Rational c2) {
    if (!field && (c1 != 0 || c2 != 0))
        throw FieldMismatch("algebraic: nonconstant element requires a field");
    return FieldElement(std::move(field), {std::move(c0), std::move(c1), std::move(c2)});
}

FieldElement FieldElement::generator(FieldPtr field) {
    if (!field) throw FieldMismatch("generator: null field");
    return FieldElement(std::move(field), {Rational(0), Rational(1), Rational(0)});
}

bool FieldElement::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw FieldMismatch("rational_value: element is irrational");
    return c_[0];
}

FieldElement FieldElement::promote(const FieldPtr& field) const {
    if (!field_) return *this;
    if (field_ == field) return *this;
    throw FieldMismatch("promote: element belongs to a different field");
}

FieldPtr FieldElement::join_fields(const FieldElement& a, const FieldElement& b) {
    if (!a.field_) return b.field_;
    if (!b.field_) return a.field_;
    if (a.field_ == b.field_) return a.field_;
    throw FieldMismatch("cannot combine elements of different cubic fields");
}

FieldElement FieldElement::operator-() const {
    return FieldElement(field_, {-c_[0], -c_[1], -c_[2]});
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldPtr f = join_fields(*this, o);
    return FieldElement(std::move(f), {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]});
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    FieldPtr f = join_fields(*this, o);
    if (!f) return FieldElement(c_[0] * o.c_[0]);
    // Convolve, then eliminate u^4 and u^3 via u^3 = -(a u^2 + b u + c).
    std::array<Rational, 5> e{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e[i + j] += c_[i] * o.c_[j];
    const PolyQ& p = f->min_poly();
    const Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    for (int deg = 4; deg >= 3; --deg) {
        if (e[deg] == 0) continue;
        e[deg - 1] -= a * e[deg];
        e[deg - 2] -= b * e[deg];
        e[deg - 3] -= c * e[deg];
        e[deg] = 0;
    }
    return FieldElement(std::move(f), {e[0], e[1], e[2]});
}

namespace {

// g = s*a + t*b with g the (non-normalized) gcd.
void ext_gcd(const PolyQ& a, const PolyQ& b, PolyQ& g, PolyQ& s, PolyQ& t) {
    PolyQ r0 = a, r1 = b;
    PolyQ s0 = PolyQ::constant(Rational(1)), s1;
    PolyQ t0, t1 = PolyQ::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        PolyQ s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        PolyQ t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    g = r0;
    s = s0;
    t = t0;
}

} // namespace

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (o.is_zero()) throw DivByZero("division by zero field element");
    if (o.is_rational()) {
        Rational inv = Rational(1) / o.c_[0];
        return FieldElement(field_, {c_[0] * inv, c_[1] * inv, c_[2] * inv});
    }
    FieldPtr f = join_fields(*this, o);
    PolyQ u(std::vector<Rational>{o.c_[0], o.c_[1], o.c_[2]});
    PolyQ g, s, t;
    ext_gcd(u, f->min_poly(), g, s, t);
    if (g.degree() != 0)
        throw Error("field inverse: gcd with minimal polynomial is nonconstant");
    PolyQ inv = divmod(s * PolyQ::constant(Rational(1) / g.coeff(0)), f->min_poly()).second;
    FieldElement invElem(f, {inv.coeff(0), inv.coeff(1), inv.coeff(2)});
    return *this * invElem;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ == o.field_) return c_ == o.c_;
    if (!field_ || !o.field_) return false; // rational vs irrational
    // Distinct field objects: equal only when they present the same root of
    // the same polynomial (elements given in a common basis).
    if (!(field_->min_poly() == o.field_->min_poly())) return false;
    IsolatingInterval i1 = field_->interval();
    IsolatingInterval i2 = o.field_->interval();
    Rational lo = std::max(i1.lo, i2.lo);
    Rational hi = std::min(i1.hi, i2.hi);
    if (!(lo < hi)) return false;
    if (sturm_count(field_->min_poly(), lo, hi) != 1) return false;
    return c_ == o.c_;
}

std::string FieldElement::str() const {
    if (is_rational()) return to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    static const char* names[3] = {"", "u", "u^2"};
    for (int i = 0; i < 3; ++i) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        if (first) {
            if (i == 0) {
                os << to_string(v);
            } else {
                if (v == -1)
                    os << '-';
                else if (v != 1)
                    os << to_string(v) << '*';
                os << names[i];
            }
            first = false;
            continue;
        }
        if (sign(v) < 0) {
            os << " - ";
            v = -v;
        } else {
            os << " + ";
        }
        if (i == 0) {
            os << to_string(v);
        } else {
            if (v != 1) os << to_string(v) << '*';
            os << names[i];
        }
    }
    if (first) os << '0';
    return os.str();
}

// ---------------------------------------------------------------------------
// Sign, floor, minimal polynomial

namespace {

struct RatInterval {
    Rational lo, hi;
};

RatInterval scale(const Rational& q, const RatInterval& iv) {
    if (sign(q) >= 0) return {q * iv.lo, q * iv.hi};
    return {q * iv.hi, q * iv.lo};
}

RatInterval square_range(const RatInterval& iv) {
    Rational a = iv.lo * iv.lo;
    Rational b = iv.hi * iv.hi;
    if (sign(iv.lo) >= 0) return {a, b};
    if (sign(iv.hi) <= 0) return {b, a};
    return {Rational(0), std::max(a, b)};
}

Integer rational_floor(const Rational& r) {
    Integer num = r.get_num();
    Integer den = r.get_den();
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Integer floor_mid(const Integer& lo, const Integer& hi) {
    Integer s = lo + hi;
    Integer q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), s.get_mpz_t(), 1);
    return q;
}

} // namespace

int sign_of(const FieldElement& e) {
    const auto& c = e.coeffs();
    if (e.is_rational()) return sign(c[0]);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) return 0;
    const FieldPtr& f = e.field();
    for (int iter = 0; iter < 100000; ++iter) {
        IsolatingInterval root = f->interval();
        RatInterval u{root.lo, root.hi};
        RatInterval u2 = square_range(u);
        RatInterval t1 = scale(c[1], u);
        RatInterval t2 = scale(c[2], u2);
        Rational lo = c[0] + t1.lo + t2.lo;
        Rational hi = c[0] + t1.hi + t2.hi;
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        f->refine_once();
    }
    throw Error("sign_of: interval refinement failed to converge");
}

Integer floor_of(const FieldElement& e) {
    if (e.is_rational()) return rational_floor(e.rational_value());
    Integer lo, hi;
    if (sign_of(e) >= 0) {
        lo = 0;
        hi = 1;
        while (sign_of(e - FieldElement(Rational(hi))) >= 0) hi *= 2;
    } else {
        hi = 0;
        lo = -1;
        while (sign_of(e - FieldElement(Rational(lo))) < 0) lo *= 2;
    }
    // Invariant: lo <= e < hi.
    while (hi - lo > 1) {
        Integer mid = floor_mid(lo, hi);
        if (sign_of(e - FieldElement(Rational(mid))) >= 0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Integer floor_ratio(const FieldElement& num, const FieldElement& den) {
    if (den.is_zero()) throw DivByZero("floor_ratio: zero denominator");
    return floor_of(num / den);
}

PolyQ minimal_polynomial(const FieldElement& e) {
    if (e.is_rational()) return PolyQ(std::vector<Rational>{-e.rational_value(), Rational(1)});
    FieldElement e2 = e * e;
    FieldElement e3 = e2 * e;
    // Solve [1 e e2] * (p0 p1 p2)^T = -e3 componentwise in the basis 1,u,u^2.
    Rational m[3][4];
    for (int r = 0; r < 3; ++r) {
        m[r][0] = (r == 0) ? Rational(1) : Rational(0);
        m[r][1] = e.coeffs()[r];
        m[r][2] = e2.coeffs()[r];
        m[r][3] = -e3.coeffs()[r];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = -1;
        for (int r = col; r < 3; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("minimal_polynomial: singular power system");
        if (pivot != col)
            for (int j = 0; j < 4; ++j) std::swap(m[pivot][j], m[col][j]);
        Rational inv = Rational(1) / m[col][col];
        for (int j = col; j < 4; ++j) m[col][j] *= inv;
        for (int r = 0; r < 3; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (int j = col; j < 4; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    PolyQ result(std::vector<Rational>{m[0][3], m[1][3], m[2][3], Rational(1)});
    FieldElement check = e3 + FieldElement(m[2][3]) * e2 + FieldElement(m[1][3]) * e +
                         FieldElement(m[0][3]);
    if (!check.is_zero()) throw Error("minimal_polynomial: verification failed");
    return result;
}

double approx(const FieldElement& e) {
    if (e.is_rational()) return e.rational_value().get_d();
    Integer denom = Integer(1) << 60;
    IsolatingInterval iv = e.field()->refine_to(Rational(1) / Rational(denom));
    Rational mid = (iv.lo + iv.hi) / 2;
    const auto& c = e.coeffs();
    Rational value = c[0] + c[1] * mid + c[2] * mid * mid;
    return value.get_d();
}

} // namespace tripcf
