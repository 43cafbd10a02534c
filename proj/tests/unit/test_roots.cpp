#include "doctest.h"

#include "tripcf/errors.hpp"
#include "tripcf/roots.hpp"

using namespace tripcf;

namespace {

bool contains_sign_change(const PolyQ& p, const IsolatingInterval& iv) {
    return p.sign_at(iv.lo) * p.sign_at(iv.hi) < 0;
}

} // namespace

TEST_CASE("cauchy bound dominates all roots") {
    PolyQ p = PolyQ::monic_cubic(Rational(0), Rational(-3), Rational(-1)); // roots ~ 1.88, -0.35, -1.53
    Rational b = cauchy_root_bound(p);
    CHECK(b == Rational(4)); // 1 + max(3,1)
    CHECK(p.sign_at(b) != 0);
    CHECK(sturm_count(p, -b, b) == 3);
}

TEST_CASE("sturm count on frozen intervals") {
    PolyQ p = PolyQ::monic_cubic(Rational(0), Rational(-3), Rational(-1)); // x^3-3x-1
    CHECK(sturm_count(p, Rational(-2), Rational(2)) == 3);
    CHECK(sturm_count(p, Rational(0), Rational(2)) == 1);
    CHECK(sturm_count(p, Rational(-2), Rational(0)) == 2);
    PolyQ q = PolyQ::monic_cubic(Rational(1), Rational(0), Rational(-1)); // x^3+x^2-1
    CHECK(sturm_count(q, Rational(0), Rational(1)) == 1);
    CHECK(sturm_count(q, Rational(-10), Rational(0)) == 0);
}

TEST_CASE("isolation finds every real root exactly once") {
    SUBCASE("three real roots") {
        PolyQ p = PolyQ::monic_cubic(Rational(0), Rational(-3), Rational(-1));
        auto ivs = isolate_real_roots(p);
        REQUIRE(ivs.size() == 3);
        for (const auto& iv : ivs) CHECK(contains_sign_change(p, iv));
        CHECK(ivs[0].hi <= ivs[1].lo);
        CHECK(ivs[1].hi <= ivs[2].lo);
    }
    SUBCASE("one real root") {
        PolyQ p = PolyQ::monic_cubic(Rational(1), Rational(0), Rational(-1));
        auto ivs = isolate_real_roots(p);
        REQUIRE(ivs.size() == 1);
        CHECK(contains_sign_change(p, ivs[0]));
        IsolatingInterval iv = refine(ivs[0], p, rational(1, 1000));
        // root of x^3+x^2-1 is 0.75487766...
        CHECK(iv.lo < rational(7549, 10000));
        CHECK(iv.hi > rational(7548, 10000));
    }
    SUBCASE("rational roots landing on bisection midpoints") {
        // x^3 - x = x(x-1)(x+1); midpoint of the initial bound interval is 0.
        PolyQ p(std::vector<Rational>{Rational(0), Rational(-1), Rational(0), Rational(1)});
        auto ivs = isolate_real_roots(p);
        REQUIRE(ivs.size() == 3);
        for (const auto& iv : ivs) CHECK(contains_sign_change(p, iv));
        IsolatingInterval mid = refine(ivs[1], p, rational(1, 64));
        CHECK(mid.lo < 0);
        CHECK(mid.hi > 0);
        CHECK(mid.width() <= rational(1, 64));
    }
    SUBCASE("no real roots of even-degree positive polynomial") {
        PolyQ p(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}); // x^2+1
        CHECK(isolate_real_roots(p).empty());
    }
}

TEST_CASE("isolation rejects repeated roots") {
    PolyQ q(std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK_THROWS_AS(isolate_real_roots(q * q), NotSquarefree);
}

TEST_CASE("refine preserves the bracketed root and honors the width request") {
    PolyQ p = PolyQ::monic_cubic(Rational(2), Rational(1), Rational(-1)); // x^3+2x^2+x-1
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 1);
    Rational w = rational(1, 1 << 20);
    IsolatingInterval iv = refine(ivs[0], p, w);
    CHECK(iv.width() <= w);
    CHECK(contains_sign_change(p, iv));
    // root is 0.46557123...
    CHECK(iv.lo < rational(4656, 10000));
    CHECK(iv.hi > rational(4655, 10000));
}
