#pragma once

#include "tripcf/hermite.hpp"

#include "json.hpp"

#include <array>
#include <string>
#include <vector>

namespace tripcf {

// Plain-data documents mirroring the library's results: every exact value is
// carried as its canonical string, so the documents serialize to JSON and
// round-trip losslessly (parse(serialize(doc)) == doc).

/// A field element as its exact coefficient triple (c0, c1, c2) over the
/// generator u of `minPoly` (empty for plain rationals), plus a display form.
struct ElementDoc {
    std::array<std::string, 3> coeffs{"0", "0", "0"};
    std::string minPoly;
    std::string display;

    bool operator==(const ElementDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ElementDoc, coeffs, minPoly, display)

struct PointDoc {
    ElementDoc x;
    ElementDoc y;

    bool operator==(const PointDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PointDoc, x, y)

struct TupleDoc {
    std::vector<long> ms;
    long k = 0;

    bool operator==(const TupleDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TupleDoc, ms, k)

struct PeriodicityDoc {
    std::string status;
    long preperiod = 0;
    long period = 0;
    std::vector<TupleDoc> tuples;
    std::string note;

    bool operator==(const PeriodicityDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PeriodicityDoc, status, preperiod, period, tuples, note)

struct SequenceDoc {
    std::string map;
    PointDoc start;
    std::vector<long> digits;
    std::vector<PointDoc> points; // orbit including the start point
    std::string termination;
    std::string note;

    bool operator==(const SequenceDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SequenceDoc, map, start, digits, points, termination, note)

/// One (A, B) cell of a verification grid. status is "checked" (all three
/// checks ran against the cubic field), "reducible" (matrix + quotient-ring
/// eigencheck only; no cubic field exists, periodicity not applicable), or
/// "rejected" (parameters outside the statement's range).
struct VerifyCellDoc {
    long A = 0;
    long B = 0;
    std::string status;
    bool matrixOK = false;
    bool eigenOK = false;
    bool periodOK = false;
    std::string detail;

    bool operator==(const VerifyCellDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyCellDoc, A, B, status, matrixOK, eigenOK, periodOK,
                                   detail)

struct VerifyDoc {
    int theorem = 0;
    std::vector<VerifyCellDoc> cells;
    long checked = 0;
    long reducible = 0;
    long rejected = 0;
    bool allPass = false; // every non-rejected cell passed its applicable checks

    bool operator==(const VerifyDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyDoc, theorem, cells, checked, reducible, rejected,
                                   allPass)

struct ChainStepDoc {
    int caseId = 0;
    std::string input;
    std::string output;
    std::string map;

    bool operator==(const ChainStepDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ChainStepDoc, caseId, input, output, map)

struct UnitResultDoc {
    ElementDoc v;
    std::string fieldPoly;
    std::string rootInterval;
    int formId = 0;
    std::string P;
    std::string Q;
    std::string formEquation;
    PointDoc pair;
    std::string combo;
    PeriodicityDoc periodicity;
    std::vector<ChainStepDoc> chain;
    std::string discriminant;

    bool operator==(const UnitResultDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(UnitResultDoc, v, fieldPoly, rootInterval, formId, P, Q,
                                   formEquation, pair, combo, periodicity, chain, discriminant)

struct UnitReportDoc {
    std::string input;
    std::vector<UnitResultDoc> results;

    bool operator==(const UnitReportDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(UnitReportDoc, input, results)

struct HermiteRowDoc {
    long index = 0;
    std::string combo;
    std::vector<TupleDoc> tuples;
    std::vector<long> digits;
    std::string termination;
    std::string note;
    bool periodic = false;
    PeriodicityDoc periodicity;

    bool operator==(const HermiteRowDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HermiteRowDoc, index, combo, tuples, digits, termination,
                                   note, periodic, periodicity)

struct RowNoteDoc {
    long index = 0;
    std::string status;

    bool operator==(const RowNoteDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RowNoteDoc, index, status)

struct SearchDoc {
    bool found = false;
    long scanned = 0;
    HermiteRowDoc row; // meaningful when found
    std::vector<RowNoteDoc> provenance;
    std::string note;

    bool operator==(const SearchDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SearchDoc, found, scanned, row, provenance, note)

struct HermiteReportDoc {
    PointDoc start;
    std::vector<HermiteRowDoc> rows;
    SearchDoc search;

    bool operator==(const HermiteReportDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HermiteReportDoc, start, rows, search)

struct PartitionCellDoc {
    std::vector<long> word;
    std::string matrix;
    std::array<std::array<std::string, 2>, 3> vertices;

    bool operator==(const PartitionCellDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PartitionCellDoc, word, matrix, vertices)

struct PartitionDoc {
    std::string map;
    int depth = 0;
    long perLevelMax = 0;
    std::vector<PartitionCellDoc> cells;

    bool operator==(const PartitionDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PartitionDoc, map, depth, perLevelMax, cells)

struct CheckDoc {
    std::string name;
    bool pass = false;
    std::string detail;

    bool operator==(const CheckDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckDoc, name, pass, detail)

struct SelftestDoc {
    unsigned long seed = 0;
    std::vector<CheckDoc> checks;
    bool allPass = false;

    bool operator==(const SelftestDoc&) const = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SelftestDoc, seed, checks, allPass)

// ---------------------------------------------------------------------------
// Builders: run the underlying computation and package the result.

ElementDoc element_doc(const FieldElement& e);
PointDoc point_doc(const TrianglePoint& p);
TupleDoc tuple_doc(const DigitTuple& t);
PeriodicityDoc periodicity_doc(const PeriodicityReport& r);
HermiteRowDoc hermite_row_doc(const HermiteRow& row);

SequenceDoc sequence_doc(const TripMapSpec& spec, const TrianglePoint& start, int length,
                         long maxDigit = 10000);

/// Runs the three checks of the given theorem (1, 2 or 3) over the inclusive
/// grid [loA, hiA] x [loB, hiB]: displayed matrix == digit-matrix product,
/// left eigencheck with eigenvalue u (quotient-ring identity on reducible
/// cells), and orbit periodicity proven with preperiod 0, period 1 and the
/// predicted digit tuple.
VerifyDoc verify_grid(int theorem, long loA, long hiA, long loB, long hiB,
                      int capIterations = 1000);

UnitReportDoc unit_report_doc(const PolyQ& p, const PipelineCaps& caps = {});

/// Streams rows 1..rows of the digit matrix of `start` plus the bounded
/// first-periodic-row search over the same range.
HermiteReportDoc hermite_report_doc(const TrianglePoint& start, long rows, int length,
                                    const PipelineCaps& caps = {});

PartitionDoc partition_doc(const TripMapSpec& spec, int depth, long perLevelMax);

/// Deterministic cross-module smoke battery; `seed` drives the sampled
/// partition-geometry property.
SelftestDoc selftest_doc(unsigned long seed);

// ---------------------------------------------------------------------------
// Renderers.

template <class Doc>
std::string render_json(const Doc& doc) {
    return nlohmann::json(doc).dump(2) + "\n";
}

std::string render_text(const SequenceDoc& doc);
std::string render_text(const VerifyDoc& doc);
std::string render_text(const UnitReportDoc& doc);
std::string render_text(const HermiteReportDoc& doc);
std::string render_text(const PartitionDoc& doc);
std::string render_text(const SelftestDoc& doc);

std::string render_csv(const SequenceDoc& doc);
std::string render_csv(const VerifyDoc& doc);
std::string render_csv(const UnitReportDoc& doc);
std::string render_csv(const HermiteReportDoc& doc);
std::string render_csv(const PartitionDoc& doc);
std::string render_csv(const SelftestDoc& doc);

/// Standalone SVG rendering of the cells (exact vertices projected to double
/// precision only for drawing).
std::string partition_svg(const PartitionDoc& doc);

} // namespace tripcf
