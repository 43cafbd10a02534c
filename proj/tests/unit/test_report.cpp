#include "tripcf/report.hpp"

#include "tripcf/errors.hpp"

#include "doctest.h"

using namespace tripcf;

namespace {

TrianglePoint rat_point(const char* x, const char* y) {
    return TrianglePoint::make(parse_rational(x), parse_rational(y));
}

// parse(serialize(doc)) == doc, through the dumped string.
template <class Doc>
bool round_trips(const Doc& doc) {
    nlohmann::json j = nlohmann::json::parse(render_json(doc));
    return j.template get<Doc>() == doc;
}

} // namespace

TEST_CASE("sequence document: rational orbit") {
    SequenceDoc doc = sequence_doc(TripMapSpec::parse("e,e,e"), rat_point("7/10", "1/5"), 5);
    CHECK(doc.map == "e,e,e");
    CHECK(doc.digits == std::vector<long>{1, 4, 0});
    CHECK(doc.termination == "degenerate");
    REQUIRE(doc.points.size() == 4);
    CHECK(doc.points[0].x.display == "7/10");
    CHECK(doc.points[0].x.coeffs == std::array<std::string, 3>{"7/10", "0", "0"});
    CHECK(doc.points[0].x.minPoly.empty());
    CHECK(doc.points[3].x.display == "1");
    CHECK(round_trips(doc));
}

TEST_CASE("sequence document: cubic orbit carries the field polynomial") {
    FieldPtr field = fields_in_unit_interval(parse_cubic("x^3+x^2+x-1")).at(0);
    FieldElement u = FieldElement::generator(field);
    SequenceDoc doc =
        sequence_doc(TripMapSpec::parse("e,e,e"), TrianglePoint::make(u, u * u), 6);
    CHECK(doc.digits == std::vector<long>(6, 1));
    CHECK(doc.termination == "completed");
    CHECK(doc.start.x.minPoly == "x^3+x^2+x-1");
    CHECK(doc.start.x.display == "u");
    CHECK(doc.start.y.coeffs == std::array<std::string, 3>{"0", "0", "1"});
    CHECK(round_trips(doc));
}

TEST_CASE("verify grid: theorem 1 block passes and round-trips") {
    VerifyDoc doc = verify_grid(1, 0, 3, 1, 3, 100);
    CHECK(doc.theorem == 1);
    CHECK(doc.cells.size() == 12);
    CHECK(doc.allPass);
    CHECK(doc.rejected == 0);
    CHECK(doc.checked + doc.reducible == 12);
    CHECK(doc.reducible == 1); // A = B + 2 at (3, 1)
    for (const VerifyCellDoc& c : doc.cells) {
        CAPTURE(c.A);
        CAPTURE(c.B);
        CHECK(c.matrixOK);
        CHECK(c.eigenOK);
        if (c.status == "checked") {
            CHECK(c.periodOK);
            CHECK(c.detail.substr(0, 6) == "cycle ");
        }
    }
    CHECK(round_trips(doc));
}

TEST_CASE("verify grid: reducible theorem-2 cells use the ring identity") {
    VerifyDoc doc = verify_grid(2, 2, 2, 2, 2, 100);
    REQUIRE(doc.cells.size() == 1);
    CHECK(doc.cells[0].status == "reducible");
    CHECK(doc.cells[0].matrixOK);
    CHECK(doc.cells[0].eigenOK);
    CHECK(doc.allPass);
    CHECK(round_trips(doc));
}

TEST_CASE("verify grid: out-of-range cells are rejected without failing the run") {
    VerifyDoc doc = verify_grid(3, 2, 2, 1, 3, 100);
    REQUIRE(doc.cells.size() == 3);
    CHECK(doc.rejected == 2); // B = 1, 2 violate B > A = 2
    CHECK(doc.checked == 1);  // B = 3
    CHECK(doc.allPass);
    CHECK(doc.cells[0].status == "rejected");
    CHECK(!doc.cells[0].detail.empty());
    CHECK(round_trips(doc));

    CHECK_THROWS_AS(verify_grid(4, 0, 1, 1, 2), ParameterRange);
}

TEST_CASE("unit report document: x^3+x^2-1") {
    UnitReportDoc doc = unit_report_doc(parse_cubic("x^3+x^2-1"));
    CHECK(doc.input == "x^3+x^2-1");
    REQUIRE(doc.results.size() == 1);
    const UnitResultDoc& r = doc.results[0];
    CHECK(r.formId == 4);
    CHECK(r.P == "1");
    CHECK(r.Q == "2");
    CHECK(r.formEquation == "x^3-x^2+2x-1");
    CHECK(r.fieldPoly == "x^3-x^2+2x-1");
    CHECK(r.v.display == "u");
    CHECK(r.combo == "class:3,n:1");
    CHECK(r.periodicity.status == "proven-by-revisit");
    CHECK(r.periodicity.preperiod == 0);
    CHECK(r.periodicity.period == 1);
    REQUIRE(r.periodicity.tuples.size() == 1);
    CHECK(r.periodicity.tuples[0] == TupleDoc{{0}, 0});
    REQUIRE(r.chain.size() == 2);
    CHECK(r.chain[0].caseId == 9);
    CHECK(r.chain[0].map == "square");
    CHECK(r.chain[1].caseId == 6);
    CHECK(r.chain[1].map == "identity");
    CHECK(r.discriminant == "-23");
    CHECK(round_trips(doc));
}

TEST_CASE("hermite report document: rational pair") {
    HermiteReportDoc doc = hermite_report_doc(rat_point("7/10", "1/5"), 3, 4);
    CHECK(doc.start.x.display == "7/10");
    REQUIRE(doc.rows.size() == 3);
    CHECK(doc.rows[0].index == 1);
    CHECK(doc.rows[0].combo == "class:1,n:0");
    CHECK(doc.rows[0].digits == std::vector<long>{1, 4, 0});
    CHECK(doc.rows[0].termination == "degenerate");
    CHECK_FALSE(doc.search.found);
    CHECK(doc.search.scanned == 3);
    REQUIRE(doc.search.provenance.size() == 3);
    CHECK(doc.search.provenance[0].index == 1);
    CHECK(round_trips(doc));
}

TEST_CASE("hermite report document: periodic pair records the found row") {
    // The theorem row of this pair is index 5 (class 2, n = 1), but the bare
    // e,e,e row already has an exact cycle, so the scan stops at row 1.
    HermiteReportDoc doc = hermite_report_doc(theorem_point(2, 1, 2), 5, 3);
    CHECK(doc.search.found);
    CHECK(doc.search.row.index == 1);
    CHECK(doc.search.row.periodic);
    CHECK(doc.search.row.periodicity.preperiod == 1);
    CHECK(doc.search.row.periodicity.period == 3);
    REQUIRE(doc.rows.size() == 5);
    CHECK(doc.rows[4].combo == "class:2,n:1");
    CHECK(doc.rows[4].periodic);
    CHECK(doc.rows[4].periodicity.preperiod == 0);
    CHECK(doc.rows[4].periodicity.period == 1);
    CHECK(round_trips(doc));
}

TEST_CASE("partition document and renderers") {
    PartitionDoc doc = partition_doc(TripMapSpec::parse("e,e,e"), 1, 2);
    CHECK(doc.cells.size() == 3);
    for (const PartitionCellDoc& c : doc.cells) {
        CHECK(c.word.size() == 1);
        CHECK(c.matrix.substr(0, 2) == "[[");
    }
    CHECK(round_trips(doc));

    std::string csv = render_csv(doc);
    CHECK(csv.substr(0, 5) == "word,");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    std::string svg = partition_svg(doc);
    CHECK(svg.find("<svg") != std::string::npos);
    // one polygon per cell plus the triangle outline
    size_t polys = 0;
    for (size_t at = svg.find("<polygon"); at != std::string::npos;
         at = svg.find("<polygon", at + 1))
        ++polys;
    CHECK(polys == 4);
}

TEST_CASE("selftest battery passes and round-trips") {
    SelftestDoc doc = selftest_doc(42);
    CHECK(doc.seed == 42);
    CHECK(doc.checks.size() == 7);
    for (const CheckDoc& c : doc.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    CHECK(doc.allPass);
    CHECK(round_trips(doc));

    // A different seed only changes the sampled property's inputs.
    CHECK(selftest_doc(7).allPass);
}

TEST_CASE("text renderers surface the load-bearing facts") {
    SequenceDoc seq = sequence_doc(TripMapSpec::parse("e,e,e"), rat_point("7/10", "1/5"), 5);
    std::string text = render_text(seq);
    CHECK(text.find("digits (3): 1 4 0") != std::string::npos);
    CHECK(text.find("degenerate") != std::string::npos);

    std::string csv = render_csv(seq);
    CHECK(csv.substr(0, 17) == "step,digit,x,y\n1,");

    UnitReportDoc unit = unit_report_doc(parse_cubic("x^3+x^2-1"));
    std::string unitText = render_text(unit);
    CHECK(unitText.find("form 4 (P=1, Q=2)") != std::string::npos);
    CHECK(unitText.find("class:3,n:1") != std::string::npos);
    CHECK(unitText.find("proven-by-revisit") != std::string::npos);
    std::string unitCsv = render_csv(unit);
    CHECK(unitCsv.find("4,1,2,x^3-x^2+2x-1") != std::string::npos);

    VerifyDoc verify = verify_grid(3, 2, 2, 1, 3, 100);
    std::string verifyText = render_text(verify);
    CHECK(verifyText.find("rejected") != std::string::npos);
    CHECK(verifyText.find("all pass") != std::string::npos);

    HermiteReportDoc herm = hermite_report_doc(rat_point("7/10", "1/5"), 2, 4);
    std::string hermText = render_text(herm);
    CHECK(hermText.find("no periodic row in 2 rows") != std::string::npos);
    CHECK(render_csv(herm).find("degenerate") != std::string::npos);

    SelftestDoc self = selftest_doc(1);
    CHECK(render_text(self).find("all checks passed") != std::string::npos);
    CHECK(render_csv(self).find("boundary-digits,yes") != std::string::npos);
}

TEST_CASE("csv fields with commas are quoted") {
    VerifyDoc doc = verify_grid(3, 2, 2, 1, 1, 100); // rejected cell, detail mentions the range
    std::string csv = render_csv(doc);
    size_t firstRow = csv.find('\n') + 1;
    std::string row = csv.substr(firstRow);
    if (doc.cells[0].detail.find(',') != std::string::npos)
        CHECK(row.find('"') != std::string::npos);
    CHECK(row.substr(0, 8) == "3,2,1,re");
}
