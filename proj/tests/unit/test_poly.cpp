#include "doctest.h"

#include "tripcf/errors.hpp"
#include "tripcf/poly.hpp"

#include <array>
#include <vector>

using namespace tripcf;

namespace {

// Independent discriminant oracle: Sylvester resultant of p and p' for a
// cubic p, disc = -Res(p, p') / lead(p).
Rational det5(std::array<std::array<Rational, 5>, 5> m) {
    Rational det(1);
    for (int col = 0; col < 5; ++col) {
        int pivot = -1;
        for (int r = col; r < 5; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (int r = col + 1; r < 5; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] * inv;
            for (int j = col; j < 5; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

Rational discriminant_oracle(const PolyQ& p) {
    REQUIRE(p.degree() == 3);
    PolyQ q = p.derivative();
    std::array<std::array<Rational, 5>, 5> s{};
    for (int row = 0; row < 2; ++row)
        for (int j = 0; j <= 3; ++j) s[row][row + j] = p.coeff(3 - j);
    for (int row = 0; row < 3; ++row)
        for (int j = 0; j <= 2; ++j) s[2 + row][row + j] = q.coeff(2 - j);
    return -det5(s) / p.lead();
}

} // namespace

TEST_CASE("polynomial basics") {
    PolyQ p = PolyQ::monic_cubic(Rational(-11), Rational(23), Rational(-1));
    CHECK(p.degree() == 3);
    CHECK(p.is_monic());
    CHECK(p.has_integer_coeffs());
    CHECK(p.coeff(2) == Rational(-11));
    CHECK(p.coeff(7) == Rational(0));
    CHECK(p.eval(Rational(0)) == Rational(-1));
    CHECK(p.eval(Rational(1)) == Rational(12));
    CHECK(p.str() == "x^3-11x^2+23x-1");

    PolyQ zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    PolyQ d = p.derivative();
    CHECK(d == PolyQ(std::vector<Rational>{Rational(23), Rational(-22), Rational(3)}));
}

TEST_CASE("division and gcd") {
    PolyQ p = PolyQ::monic_cubic(Rational(0), Rational(-1), Rational(-1)); // x^3-x-1
    PolyQ q = PolyQ(std::vector<Rational>{Rational(-1), Rational(1)});     // x-1
    auto [quot, rem] = divmod(p, q);
    CHECK(quot * q + rem == p);
    CHECK(rem.degree() < q.degree());
    CHECK(rem == PolyQ::constant(Rational(-1))); // p(1) = -1

    PolyQ a = q * q * PolyQ(std::vector<Rational>{Rational(2), Rational(1)});
    PolyQ b = q * PolyQ(std::vector<Rational>{Rational(5), Rational(1)});
    PolyQ g = poly_gcd(a, b);
    CHECK(g == q); // monic gcd

    CHECK_THROWS_AS(divmod(p, PolyQ()), DivByZero);
}

TEST_CASE("squarefree detection") {
    PolyQ q = PolyQ(std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(is_squarefree(PolyQ::monic_cubic(Rational(0), Rational(-1), Rational(-1))));
    CHECK_FALSE(is_squarefree(q * q));
}

TEST_CASE("discriminant frozen values") {
    CHECK(discriminant(PolyQ::monic_cubic(Rational(0), Rational(-1), Rational(-1))) ==
          Rational(-23)); // x^3-x-1
    CHECK(discriminant(PolyQ::monic_cubic(Rational(0), Rational(0), Rational(-1))) ==
          Rational(-27)); // x^3-1
    CHECK(discriminant(PolyQ::monic_cubic(Rational(0), Rational(-3), Rational(-1))) ==
          Rational(81)); // x^3-3x-1, totally real
    CHECK(discriminant(PolyQ::monic_cubic(Rational(1), Rational(0), Rational(-1))) ==
          Rational(-23)); // x^3+x^2-1
}

TEST_CASE("discriminant agrees with resultant oracle on a coefficient sweep") {
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -2; c <= 2; ++c) {
                PolyQ p = PolyQ::monic_cubic(Rational(a), Rational(b), Rational(c));
                CHECK(discriminant(p) == discriminant_oracle(p));
            }
}

TEST_CASE("irreducibility of monic integer cubics") {
    CHECK(is_irreducible_cubic(PolyQ::monic_cubic(Rational(-11), Rational(23), Rational(-1))));
    CHECK(is_irreducible_cubic(PolyQ::monic_cubic(Rational(2), Rational(1), Rational(-1))));
    CHECK(is_irreducible_cubic(PolyQ::monic_cubic(Rational(0), Rational(-1), Rational(-1))));
    // x^3+2x^2-1 = (x+1)(x^2+x-1)
    CHECK_FALSE(is_irreducible_cubic(PolyQ::monic_cubic(Rational(2), Rational(0), Rational(-1))));
    // x^3-1 = (x-1)(x^2+x+1)
    CHECK_FALSE(is_irreducible_cubic(PolyQ::monic_cubic(Rational(0), Rational(0), Rational(-1))));
    // zero constant term
    CHECK_FALSE(is_irreducible_cubic(PolyQ::monic_cubic(Rational(1), Rational(1), Rational(0))));
    CHECK_THROWS_AS(is_irreducible_cubic(PolyQ::x()), Error);
}

TEST_CASE("cubic parsing from display text and coefficient lists") {
    PolyQ want = PolyQ::monic_cubic(Rational(-11), Rational(23), Rational(-1));
    CHECK(parse_cubic("x^3-11x^2+23x-1") == want);
    CHECK(parse_cubic("x^3 - 11x^2 + 23x - 1") == want);
    CHECK(parse_cubic("-11,23,-1") == want);
    CHECK(parse_cubic("1,-11,23,-1") == want);
    CHECK(parse_cubic("3,2,-1") == PolyQ::monic_cubic(Rational(3), Rational(2), Rational(-1)));
    CHECK_THROWS_AS(parse_cubic("2,-11,23,-1"), ParseError); // nonunit lead
    CHECK_THROWS_AS(parse_cubic("x^2-2"), ParseError);       // wrong degree
    CHECK_THROWS_AS(parse_cubic(""), ParseError);
}

TEST_CASE("general polynomial parsing") {
    CHECK(parse_poly("x^2 - 2") == PolyQ(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)}));
    CHECK(parse_poly("1/2x + 1") == PolyQ(std::vector<Rational>{Rational(1), rational(1, 2)}));
    CHECK(parse_poly("-x^3+x") ==
          PolyQ(std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(-1)}));
    CHECK(parse_poly("5") == PolyQ::constant(Rational(5)));
}
