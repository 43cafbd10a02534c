#include "tripcf/roots.hpp"

#include "tripcf/errors.hpp"

#include <algorithm>
#include <utility>

namespace tripcf {

std::vector<PolyQ> sturm_chain(const PolyQ& p) {
    std::vector<PolyQ> chain;
    chain.push_back(p);
    PolyQ d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const PolyQ& a = chain[chain.size() - 2];
        const PolyQ& b = chain[chain.size() - 1];
        PolyQ r = divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations_at(const std::vector<PolyQ>& chain, const Rational& t) {
    int variations = 0;
    int prev = 0;
    for (const PolyQ& q : chain) {
        int s = q.sign_at(t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int sturm_count(const PolyQ& p, const Rational& a, const Rational& b) {
    if (p.sign_at(a) == 0 || p.sign_at(b) == 0)
        throw Error("sturm_count: endpoint is a root");
    if (!(a < b)) throw Error("sturm_count: empty interval");
    std::vector<PolyQ> chain = sturm_chain(p);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

Rational cauchy_root_bound(const PolyQ& p) {
    if (p.degree() < 1) return Rational(1);
    Rational lead = p.lead();
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = p.coeff(i) / lead;
        if (sign(q) < 0) q = -q;
        if (q > m) m = q;
    }
    return Rational(1) + m;
}

namespace {

// Nudges an endpoint off a root of p by shrinking toward the opposite end.
Rational move_off_root(const PolyQ& p, Rational bad, const Rational& toward) {
    Rational step = (toward - bad) / 2;
    Rational t = bad + step;
    while (p.sign_at(t) == 0) {
        step /= 2;
        t = bad + step;
    }
    return t;
}

void bisect_into(const PolyQ& p, const std::vector<PolyQ>& chain, const Rational& lo,
                 const Rational& hi, int count, std::vector<IsolatingInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back(IsolatingInterval{lo, hi});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (p.sign_at(mid) == 0) {
        // A root sits exactly at the midpoint: pick a nearby split point that
        // is not a root (roots are finitely many, so halving terminates).
        Rational quarter = (hi - lo) / 4;
        Rational t = mid + quarter;
        while (p.sign_at(t) == 0) {
            quarter /= 2;
            t = mid + quarter;
        }
        mid = t;
    }
    int leftCount = sign_variations_at(chain, lo) - sign_variations_at(chain, mid);
    bisect_into(p, chain, lo, mid, leftCount, out);
    bisect_into(p, chain, mid, hi, count - leftCount, out);
}

} // namespace

std::vector<IsolatingInterval> isolate_real_roots(const PolyQ& p) {
    if (p.degree() < 1) return {};
    if (!is_squarefree(p))
        throw NotSquarefree("isolate_real_roots: polynomial has a repeated root: " + p.str());
    Rational bound = cauchy_root_bound(p);
    Rational lo = -bound;
    Rational hi = bound;
    if (p.sign_at(lo) == 0) lo = move_off_root(p, lo, lo - 1);
    if (p.sign_at(hi) == 0) hi = move_off_root(p, hi, hi + 1);
    std::vector<PolyQ> chain = sturm_chain(p);
    int total = sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
    std::vector<IsolatingInterval> out;
    bisect_into(p, chain, lo, hi, total, out);
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return out;
}

IsolatingInterval refine(IsolatingInterval iv, const PolyQ& p, const Rational& width) {
    int signLo = p.sign_at(iv.lo);
    if (signLo == 0 || signLo == p.sign_at(iv.hi))
        throw Error("refine: interval does not bracket a sign change");
    while (iv.width() > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int s = p.sign_at(mid);
        if (s == 0) {
            // Rational root exactly at the midpoint; shrink symmetrically so
            // it stays interior.
            Rational quarter = (iv.hi - iv.lo) / 4;
            iv = IsolatingInterval{mid - quarter, mid + quarter};
            signLo = p.sign_at(iv.lo);
            continue;
        }
        if (s == signLo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

} // namespace tripcf
