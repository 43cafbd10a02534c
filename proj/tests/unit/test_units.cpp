#include "tripcf/units.hpp"

#include "tripcf/errors.hpp"

#include "doctest.h"

#include <cmath>
#include <string>

using namespace tripcf;

namespace {

PolyQ cubic(const char* text) { return parse_cubic(text); }

} // namespace

TEST_CASE("unit constant check") {
    UnitShape s1 = unit_constant_check(cubic("x^3+x^2-1"));
    CHECK(s1.isUnitShape);
    CHECK(s1.signOfConstant == -1);
    UnitShape s2 = unit_constant_check(cubic("x^3-2x-1"));
    CHECK(s2.isUnitShape);
    CHECK(s2.signOfConstant == -1);
    UnitShape s3 = unit_constant_check(cubic("x^3+x^2+x+1"));
    CHECK(s3.isUnitShape);
    CHECK(s3.signOfConstant == 1);
    CHECK_FALSE(unit_constant_check(cubic("x^3+x-2")).isUnitShape);
    CHECK_FALSE(unit_constant_check(parse_poly("2x^3+x-1")).isUnitShape);
    CHECK_FALSE(unit_constant_check(parse_poly("x^2-1")).isUnitShape);
    CHECK_FALSE(unit_constant_check(parse_poly("x^3-1/2x-1")).isUnitShape);
}

TEST_CASE("square transform formulas") {
    CHECK(square_transform(3, 1, 5) == cubic("x^3-11x^2+23x-1"));
    CHECK(square_transform(9, 1, 0) == cubic("x^3-x^2+2x-1"));
    CHECK(square_transform(10, 1, 0) == cubic("x^3-x^2+2x-1"));
    CHECK(square_transform(15, 0, 1) == cubic("x^3-2x^2+x-1"));
    CHECK(square_transform(4, 2, 1) == cubic("x^3-6x^2+5x-1"));
    CHECK(square_transform(5, 4, 1) == cubic("x^3-14x^2+9x-1"));

    CHECK_THROWS_AS(square_transform(2, 1, 1), ParameterRange);
    CHECK_THROWS_AS(square_transform(6, 1, 2), ParameterRange);
    CHECK_THROWS_AS(square_transform(3, 0, 5), ParameterRange);
    CHECK_THROWS_AS(square_transform(9, 1, 1), ParameterRange);
    CHECK_THROWS_AS(square_transform(15, 1, 1), ParameterRange);
}

TEST_CASE("square transform matches the minimal-polynomial oracle") {
    struct Instance {
        int caseId;
        long A, B;
        const char* input;
    };
    const Instance instances[] = {
        {3, 1, 5, "x^3+x^2-5x+1"},  {3, 1, 4, "x^3+x^2-4x+1"},  {3, 2, 6, "x^3+2x^2-6x+1"},
        {4, 2, 1, "x^3+2x^2-x-1"},  {4, 3, 1, "x^3+3x^2-x-1"},  {4, 3, 2, "x^3+3x^2-2x-1"},
        {5, 4, 1, "x^3-4x^2+x+1"},  {5, 5, 1, "x^3-5x^2+x+1"},  {5, 5, 2, "x^3-5x^2+2x+1"},
        {9, 1, 0, "x^3+x^2-1"},     {9, 3, 0, "x^3+3x^2-1"},    {9, 4, 0, "x^3+4x^2-1"},
        {10, 3, 0, "x^3-3x^2+1"},   {10, 4, 0, "x^3-4x^2+1"},   {10, 5, 0, "x^3-5x^2+1"},
        {15, 0, 3, "x^3-3x+1"},     {15, 0, 4, "x^3-4x+1"},     {15, 0, 5, "x^3-5x+1"},
    };
    for (const Instance& inst : instances) {
        CAPTURE(inst.input);
        PolyQ p = cubic(inst.input);
        PolyQ out = square_transform(inst.caseId, inst.A, inst.B);
        std::vector<FieldPtr> fields = fields_in_unit_interval(p);
        REQUIRE(!fields.empty());
        for (const FieldPtr& f : fields) {
            FieldElement u = FieldElement::generator(f);
            CHECK(minimal_polynomial(u * u) == out);
        }
    }
}

TEST_CASE("reciprocal transform") {
    CHECK(reciprocal_transform(cubic("x^3-5x^2+2x-1")) == cubic("x^3-2x^2+5x-1"));
    CHECK(reciprocal_transform(cubic("x^3-x^2+2x-1")) == cubic("x^3-2x^2+x-1"));
    PolyQ p = cubic("x^3-6x^2+5x-1");
    CHECK(reciprocal_transform(reciprocal_transform(p)) == p);
    CHECK_THROWS_AS(reciprocal_transform(cubic("x^3-x^2-2x+1")), NotUnitShape);
    CHECK_THROWS_AS(reciprocal_transform(parse_poly("x^2-1")), NotUnitShape);
}

TEST_CASE("reciprocal transform maps the large root to the unit-interval root") {
    PolyQ p = cubic("x^3-5x^2+2x-1");
    PolyQ q = reciprocal_transform(p);
    CHECK(is_irreducible_cubic(q));
    std::vector<FieldPtr> qFields = fields_in_unit_interval(q);
    REQUIRE(qFields.size() == 1);
    double v = approx(FieldElement::generator(qFields.front()));

    // p's only real root lies in (1, infinity); v must be its reciprocal.
    std::vector<IsolatingInterval> ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 1);
    IsolatingInterval iv = refine(ivs.front(), p, parse_rational("1/1000000000000"));
    double big = (iv.lo.get_d() + iv.hi.get_d()) / 2;
    CHECK(std::abs(v - 1.0 / big) < 1e-9);
}

TEST_CASE("canonicalize: passthrough case 2") {
    PolyQ p = cubic("x^3+2x^2+3x-1");
    auto results = canonicalize_unit(p);
    REQUIRE(results.size() == 1);
    const CanonicalResult& r = results.front();
    CHECK(r.form == CanonicalForm{1, 2, 3});
    CHECK(r.field->min_poly() == p);
    CHECK(r.v == FieldElement::generator(r.field));
    REQUIRE(r.chain.steps.size() == 1);
    CHECK(r.chain.steps[0] == TransformStep{2, p, p, ElementMap::Identity});
}

TEST_CASE("canonicalize: case 9 square then direct case 6") {
    PolyQ p = cubic("x^3+x^2-1");
    auto results = canonicalize_unit(p);
    REQUIRE(results.size() == 1);
    const CanonicalResult& r = results.front();
    CHECK(r.form == CanonicalForm{4, 1, 2});
    PolyQ out = cubic("x^3-x^2+2x-1");
    CHECK(r.field->min_poly() == out);
    REQUIRE(r.chain.steps.size() == 2);
    CHECK(r.chain.steps[0] == TransformStep{9, p, out, ElementMap::Square});
    CHECK(r.chain.steps[1] == TransformStep{6, out, out, ElementMap::Identity});

    // v is exactly u^2: same minimal polynomial, matching numeric value.
    FieldElement u = FieldElement::generator(fields_in_unit_interval(p).front());
    CHECK(minimal_polynomial(u * u) == out);
    double du = approx(u);
    CHECK(std::abs(approx(r.v) - du * du) < 1e-9);
}

TEST_CASE("canonicalize: case 3 square then direct case 6") {
    PolyQ p = cubic("x^3+x^2-5x+1");
    auto results = canonicalize_unit(p);
    REQUIRE(results.size() == 1);
    const CanonicalResult& r = results.front();
    CHECK(r.form == CanonicalForm{4, 11, 23});
    PolyQ out = cubic("x^3-11x^2+23x-1");
    CHECK(r.field->min_poly() == out);
    REQUIRE(r.chain.steps.size() == 2);
    CHECK(r.chain.steps[0] == TransformStep{3, p, out, ElementMap::Square});
    CHECK(r.chain.steps[1] == TransformStep{6, out, out, ElementMap::Identity});
}

TEST_CASE("canonicalize: case 4 square then reciprocal case 6") {
    PolyQ p = cubic("x^3+2x^2-x-1");
    auto results = canonicalize_unit(p);
    REQUIRE(results.size() == 1);
    const CanonicalResult& r = results.front();
    CHECK(r.form == CanonicalForm{4, 5, 6});
    PolyQ squared = cubic("x^3-6x^2+5x-1");
    PolyQ rec = cubic("x^3-5x^2+6x-1");
    CHECK(r.field->min_poly() == rec);
    REQUIRE(r.chain.steps.size() == 2);
    CHECK(r.chain.steps[0] == TransformStep{4, p, squared, ElementMap::Square});
    CHECK(r.chain.steps[1] == TransformStep{6, squared, rec, ElementMap::ReciprocalProduct});
}

TEST_CASE("canonicalize: case 5 square then reciprocal case 6") {
    PolyQ p = cubic("x^3-4x^2+x+1");
    auto results = canonicalize_unit(p);
    REQUIRE(results.size() == 1);
    const CanonicalResult& r = results.front();
    CHECK(r.form == CanonicalForm{4, 9, 14});
    REQUIRE(r.chain.steps.size() == 2);
    CHECK(r.chain.steps[0].caseId == 5);
    CHECK(r.chain.steps[0].map == ElementMap::Square);
    CHECK(r.chain.steps[0].output == cubic("x^3-14x^2+9x-1"));
    CHECK(r.chain.steps[1].map == ElementMap::ReciprocalProduct);
    CHECK(r.field->min_poly() == cubic("x^3-9x^2+14x-1"));
}

TEST_CASE("canonicalize: direct case 6, both orientations") {
    auto direct = canonicalize_unit(cubic("x^3-2x^2+3x-1"));
    REQUIRE(direct.size() == 1);
    CHECK(direct.front().form == CanonicalForm{4, 2, 3});
    REQUIRE(direct.front().chain.steps.size() == 1);
    CHECK(direct.front().chain.steps[0].map == ElementMap::Identity);

    // P > Q: two unit-interval roots, both re-rooted to the same element.
    auto swapped = canonicalize_unit(cubic("x^3-6x^2+5x-1"));
    REQUIRE(swapped.size() == 2);
    for (const CanonicalResult& r : swapped) {
        CHECK(r.form == CanonicalForm{4, 5, 6});
        REQUIRE(r.chain.steps.size() == 1);
        CHECK(r.chain.steps[0] ==
              TransformStep{6, cubic("x^3-6x^2+5x-1"), cubic("x^3-5x^2+6x-1"),
                            ElementMap::ReciprocalProduct});
    }
    CHECK(swapped[0].v == swapped[1].v);
}

TEST_CASE("canonicalize: passthrough cases 7 and 14") {
    auto c7 = canonicalize_unit(cubic("x^3-x^2-2x+1"));
    REQUIRE(c7.size() == 1);
    CHECK(c7.front().form == CanonicalForm{2, 1, 2});
    CHECK(c7.front().chain.steps[0].caseId == 7);

    auto c14 = canonicalize_unit(cubic("x^3+2x-1"));
    REQUIRE(c14.size() == 1);
    CHECK(c14.front().form == CanonicalForm{1, 0, 2});
    CHECK(c14.front().chain.steps[0].caseId == 14);
}

TEST_CASE("canonicalize rejections") {
    CHECK_THROWS_AS(canonicalize_unit(cubic("x^3+x-2")), NotUnitShape);
    CHECK_THROWS_AS(canonicalize_unit(parse_poly("2x^3+x-1")), NotUnitShape);
    CHECK_THROWS_AS(canonicalize_unit(cubic("x^3-2x^2+1")), Reducible);
    CHECK_THROWS_AS(canonicalize_unit(cubic("x^3-x-1")), NoRootInUnitInterval);
    try {
        canonicalize_unit(cubic("x^3-x-1"));
        FAIL("expected NoRootInUnitInterval");
    } catch (const NoRootInUnitInterval& e) {
        CHECK(std::string(e.what()).find("x^3+x^2-1") != std::string::npos);
    }
}

TEST_CASE("cases without unit-interval roots are rejected up front") {
    // One witness polynomial per cannot-occur sign pattern.
    const char* noRoot[] = {
        "x^3+2x^2+x+1", // case 1: (+,+,+)
        "x^3-x^2-x-1",  // case 8: (-,-,-)
        "x^3+x^2+1",    // case 11: (+,0,+)
        "x^3-x^2-1",    // case 12: (-,0,-)
        "x^3+x+1",      // case 13: (0,+,+)
        "x^3-x-1",      // case 16: (0,-,-)
    };
    for (const char* text : noRoot) {
        CAPTURE(text);
        CHECK_THROWS_AS(canonicalize_unit(cubic(text)), NoRootInUnitInterval);
    }
    CHECK_THROWS_AS(canonicalize_unit(cubic("x^3+1")), Reducible); // case 17: (0,0,+)
    CHECK_THROWS_AS(canonicalize_unit(cubic("x^3-1")), Reducible); // case 18: (0,0,-)

    // Case 8 inputs have their roots beyond 1, so the message points at the
    // reciprocal polynomial; case-1 inputs have no positive root at all.
    try {
        canonicalize_unit(cubic("x^3-x^2-x-1"));
        FAIL("expected NoRootInUnitInterval");
    } catch (const NoRootInUnitInterval& e) {
        CHECK(std::string(e.what()).find("x^3+x^2+x-1") != std::string::npos);
    }
    try {
        canonicalize_unit(cubic("x^3+2x^2+x+1"));
        FAIL("expected NoRootInUnitInterval");
    } catch (const NoRootInUnitInterval& e) {
        CHECK(std::string(e.what()).find("pass it instead") == std::string::npos);
    }
}

TEST_CASE("canonical form equations") {
    CHECK(CanonicalForm{1, 2, 3}.equation() == cubic("x^3+2x^2+3x-1"));
    CHECK(CanonicalForm{1, 0, 2}.equation() == cubic("x^3+2x-1"));
    CHECK(CanonicalForm{2, 1, 2}.equation() == cubic("x^3-x^2-2x+1"));
    CHECK(CanonicalForm{4, 1, 2}.equation() == cubic("x^3-x^2+2x-1"));
    CHECK_THROWS_AS((CanonicalForm{3, 1, 2}.equation()), ParameterRange);
    CHECK(element_map_name(ElementMap::Square) == "square");
    CHECK(element_map_name(ElementMap::ReciprocalProduct) == "reciprocal-product");
    CHECK(element_map_name(ElementMap::Identity) == "identity");
}

TEST_CASE("every emitted form satisfies its invariant") {
    const char* inputs[] = {
        "x^3+x^2+x-1",   "x^3+2x^2+3x-1", "x^3+x^2-5x+1", "x^3+x^2-4x+1", "x^3+2x^2-6x+1",
        "x^3+2x^2-x-1",  "x^3+3x^2-x-1",  "x^3+3x^2-2x-1", "x^3-4x^2+x+1", "x^3-5x^2+x+1",
        "x^3-5x^2+2x+1", "x^3-x^2+2x-1",  "x^3-x^2+3x-1",  "x^3-2x^2+3x-1", "x^3-6x^2+5x-1",
        "x^3-8x^2+7x-1", "x^3-10x^2+9x-1", "x^3-x^2-2x+1", "x^3-2x^2-x+1",  "x^3-2x^2-3x+1",
        "x^3+x^2-1",     "x^3+3x^2-1",    "x^3+4x^2-1",    "x^3-3x^2+1",    "x^3-4x^2+1",
        "x^3-5x^2+1",    "x^3+x-1",       "x^3+2x-1",      "x^3+3x-1",      "x^3-3x+1",
        "x^3-4x+1",      "x^3-5x+1",
    };
    for (const char* text : inputs) {
        CAPTURE(text);
        for (const CanonicalResult& r : canonicalize_unit(cubic(text))) {
            switch (r.form.formId) {
                case 1:
                    CHECK(r.form.P >= 0);
                    CHECK(r.form.Q >= 1);
                    break;
                case 2:
                    CHECK(r.form.P >= 1);
                    CHECK(r.form.Q >= 1);
                    break;
                case 4:
                    CHECK(r.form.P >= 1);
                    CHECK(r.form.Q > r.form.P);
                    break;
                default: FAIL("unexpected form id");
            }
            CHECK(r.chain.steps.size() <= 3);
            CHECK(r.form.equation() == r.field->min_poly());
            for (const TransformStep& s : r.chain.steps) {
                CHECK(s.output.is_monic());
                CHECK(s.output.degree() == 3);
                Rational c = s.output.coeff(0);
                CHECK((c == Rational(1) || c == Rational(-1)));
            }
        }
    }
}

TEST_CASE("pair for form") {
    auto c1 = canonicalize_unit(cubic("x^3+2x^2+x-1"));
    REQUIRE(c1.size() == 1);
    auto [pt1, combo1] = pair_for_form(c1.front().form, c1.front().v);
    CHECK(combo1 == ComboSpec{1, 0});
    CHECK(pt1.x() == c1.front().v);
    CHECK(pt1.y() == c1.front().v * c1.front().v);

    auto c4 = canonicalize_unit(cubic("x^3-x^2+2x-1"));
    REQUIRE(c4.size() == 1);
    auto [pt4, combo4] = pair_for_form(c4.front().form, c4.front().v);
    CHECK(combo4 == ComboSpec{3, 1});
    CHECK(pt4.y() == c4.front().v - c4.front().v * c4.front().v);

    CHECK_THROWS_AS(pair_for_form(CanonicalForm{1, 2, 1}, FieldElement(parse_rational("3/2"))),
                    ParameterRange);
    CHECK_THROWS_AS(pair_for_form(CanonicalForm{1, 2, 1}, FieldElement(parse_rational("1/2"))),
                    ParameterRange);
    CHECK_THROWS_AS(pair_for_form(CanonicalForm{3, 1, 2}, FieldElement(parse_rational("1/2"))),
                    ParameterRange);
}

TEST_CASE("unit pipeline: x^3+x^2-1") {
    auto results = unit_pipeline(cubic("x^3+x^2-1"));
    REQUIRE(results.size() == 1);
    const PipelineResult& r = results.front();
    CHECK(r.form == CanonicalForm{4, 1, 2});
    CHECK(r.combo == ComboSpec{3, 1});
    CHECK(r.periodicity.status == PeriodicityStatus::ProvenByRevisit);
    CHECK(r.periodicity.preperiod == 0);
    CHECK(r.periodicity.period == 1);
    REQUIRE(r.periodicity.tuples.size() == 1);
    CHECK(r.periodicity.tuples[0] == expected_theorem_tuple(3, 1, 2));
    CHECK(r.discriminantNote == Rational(-23));
    CHECK(r.chain.steps.size() == 2);
}

TEST_CASE("unit pipeline: x^3+3x^2+2x-1") {
    auto results = unit_pipeline(cubic("x^3+3x^2+2x-1"));
    REQUIRE(results.size() == 1);
    const PipelineResult& r = results.front();
    CHECK(r.form == CanonicalForm{1, 3, 2});
    CHECK(r.combo == ComboSpec{1, 1});
    CHECK(r.periodicity.status == PeriodicityStatus::ProvenByRevisit);
    CHECK(r.periodicity.preperiod == 0);
    CHECK(r.periodicity.period == 1);
    REQUIRE(r.periodicity.tuples.size() == 1);
    CHECK(r.periodicity.tuples[0] == DigitTuple{{1}, 3});
}

TEST_CASE("unit pipeline: rejection carries the stage name") {
    try {
        unit_pipeline(cubic("x^3-x-1"));
        FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
        CHECK(e.stage == "canonicalize");
        CHECK(std::string(e.what()).find("x^3+x^2-1") != std::string::npos);
    }
    CHECK_THROWS_AS(unit_pipeline(cubic("x^3-2x^2+1")), PipelineError);
}

TEST_CASE("unit pipeline: multiple unit-interval roots give independent results") {
    auto results = unit_pipeline(cubic("x^3-6x^2+5x-1"));
    REQUIRE(results.size() == 2);
    for (const PipelineResult& r : results) {
        CHECK(r.form == CanonicalForm{4, 5, 6});
        CHECK(r.combo == ComboSpec{3, 5});
        CHECK(r.periodicity.status == PeriodicityStatus::ProvenByRevisit);
        CHECK(r.periodicity.preperiod == 0);
        CHECK(r.periodicity.period == 1);
    }
    CHECK(results[0].v == results[1].v);
}
