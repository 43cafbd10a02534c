#include "tripcf/report.hpp"

#include "tripcf/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace tripcf {

namespace {

std::string join_longs(const std::vector<long>& v, const char* sep) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

std::string tuple_display(const TupleDoc& t) {
    DigitTuple raw{t.ms, t.k};
    return raw.str();
}

std::string tuples_display(const std::vector<TupleDoc>& ts) {
    std::string out;
    for (const TupleDoc& t : ts) out += tuple_display(t);
    return out;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

// ---------------------------------------------------------------------------
// Small doc constructors

ElementDoc element_doc(const FieldElement& e) {
    ElementDoc doc;
    const auto& c = e.coeffs();
    for (int i = 0; i < 3; ++i) doc.coeffs[static_cast<size_t>(i)] = to_string(c[static_cast<size_t>(i)]);
    if (!e.is_rational()) doc.minPoly = e.field()->min_poly().str();
    doc.display = e.str();
    return doc;
}

PointDoc point_doc(const TrianglePoint& p) { return PointDoc{element_doc(p.x()), element_doc(p.y())}; }

TupleDoc tuple_doc(const DigitTuple& t) { return TupleDoc{t.ms, t.k}; }

PeriodicityDoc periodicity_doc(const PeriodicityReport& r) {
    PeriodicityDoc doc;
    doc.status = periodicity_status_name(r.status);
    doc.preperiod = r.preperiod;
    doc.period = r.period;
    for (const DigitTuple& t : r.tuples) doc.tuples.push_back(tuple_doc(t));
    doc.note = r.note;
    return doc;
}

HermiteRowDoc hermite_row_doc(const HermiteRow& row) {
    HermiteRowDoc doc;
    doc.index = row.index;
    doc.combo = row.combo.str();
    for (const DigitTuple& t : row.tuples) doc.tuples.push_back(tuple_doc(t));
    doc.digits = row.digits;
    doc.termination = orbit_stop_name(row.termination);
    doc.note = row.note;
    doc.periodic = row.hasPeriodicity;
    doc.periodicity = periodicity_doc(row.periodicity);
    return doc;
}

// ---------------------------------------------------------------------------
// Builders

SequenceDoc sequence_doc(const TripMapSpec& spec, const TrianglePoint& start, int length,
                         long maxDigit) {
    OrbitResult orbit = trip_sequence(spec, start, length, maxDigit);
    SequenceDoc doc;
    doc.map = spec.str();
    doc.start = point_doc(start);
    doc.digits = orbit.digits;
    for (const TrianglePoint& p : orbit.points) doc.points.push_back(point_doc(p));
    doc.termination = orbit_stop_name(orbit.stop);
    doc.note = orbit.note;
    return doc;
}

VerifyDoc verify_grid(int theorem, long loA, long hiA, long loB, long hiB, int capIterations) {
    if (theorem < 1 || theorem > 3) throw ParameterRange("verify_grid: theorem must be 1, 2 or 3");
    VerifyDoc doc;
    doc.theorem = theorem;
    bool allPass = true;
    for (long A = loA; A <= hiA; ++A) {
        for (long B = loB; B <= hiB; ++B) {
            VerifyCellDoc cell;
            cell.A = A;
            cell.B = B;
            try {
                MatrixZ M = theorem_matrix(theorem, A, B); // throws on display/product mismatch
                cell.matrixOK = true;
                try {
                    TrianglePoint p = theorem_point(theorem, A, B);
                    cell.status = "checked";
                    EigenCheck eig = left_eigencheck(M, p.x(), p.y());
                    cell.eigenOK = eig.isEigen && eig.eigenvalue == p.x();
                    PeriodicityReport rep =
                        detect_periodicity(theorem_combo(theorem, A, B), p, capIterations);
                    DigitTuple want = expected_theorem_tuple(theorem, A, B);
                    cell.periodOK = rep.status == PeriodicityStatus::ProvenByRevisit &&
                                    rep.preperiod == 0 && rep.period == 1 &&
                                    rep.tuples.size() == 1 && rep.tuples[0] == want;
                    cell.detail = cell.periodOK ? "cycle " + want.str()
                                                : "periodicity: " + periodicity_status_name(rep.status);
                } catch (const Reducible&) {
                    cell.status = "reducible";
                    cell.eigenOK = theorem_eigen_identity(theorem, A, B);
                    cell.periodOK = false;
                    cell.detail = "reducible: eigencheck in the quotient ring; periodicity not applicable";
                }
            } catch (const ParameterRange& e) {
                cell.status = "rejected";
                cell.detail = e.what();
            }
            if (cell.status == "checked") {
                ++doc.checked;
                allPass = allPass && cell.matrixOK && cell.eigenOK && cell.periodOK;
            } else if (cell.status == "reducible") {
                ++doc.reducible;
                allPass = allPass && cell.matrixOK && cell.eigenOK;
            } else {
                ++doc.rejected;
            }
            doc.cells.push_back(std::move(cell));
        }
    }
    doc.allPass = allPass;
    return doc;
}

UnitReportDoc unit_report_doc(const PolyQ& p, const PipelineCaps& caps) {
    UnitReportDoc doc;
    doc.input = p.str();
    for (const PipelineResult& r : unit_pipeline(p, caps)) {
        UnitResultDoc res;
        res.v = element_doc(r.v);
        res.fieldPoly = r.field->min_poly().str();
        IsolatingInterval iv = r.field->interval();
        res.rootInterval = "(" + to_string(iv.lo) + ", " + to_string(iv.hi) + ")";
        res.formId = r.form.formId;
        res.P = to_string(r.form.P);
        res.Q = to_string(r.form.Q);
        res.formEquation = r.form.equation().str();
        res.pair = point_doc(r.pair);
        res.combo = r.combo.str();
        res.periodicity = periodicity_doc(r.periodicity);
        for (const TransformStep& s : r.chain.steps)
            res.chain.push_back(
                ChainStepDoc{s.caseId, s.input.str(), s.output.str(), element_map_name(s.map)});
        res.discriminant = to_string(r.discriminantNote);
        doc.results.push_back(std::move(res));
    }
    return doc;
}

HermiteReportDoc hermite_report_doc(const TrianglePoint& start, long rows, int length,
                                    const PipelineCaps& caps) {
    if (rows < 1) throw ParameterRange("hermite_report_doc: rows must be >= 1");
    HermiteReportDoc doc;
    doc.start = point_doc(start);
    for (long i = 1; i <= rows; ++i) doc.rows.push_back(hermite_row_doc(hermite_row(start, i, length, caps)));
    PeriodicSearchResult search = find_periodic_row(start, rows, caps);
    doc.search.found = search.found;
    doc.search.scanned = search.scanned;
    if (search.found) doc.search.row = hermite_row_doc(search.row);
    for (const RowNote& n : search.provenance)
        doc.search.provenance.push_back(RowNoteDoc{n.index, n.status});
    doc.search.note = search.note;
    return doc;
}

PartitionDoc partition_doc(const TripMapSpec& spec, int depth, long perLevelMax) {
    PartitionDoc doc;
    doc.map = spec.str();
    doc.depth = depth;
    doc.perLevelMax = perLevelMax;
    for (const PartitionCell& cell : partition_cells(spec, depth, perLevelMax)) {
        PartitionCellDoc c;
        c.word = cell.word;
        c.matrix = cell.matrix.str();
        for (int i = 0; i < 3; ++i) {
            c.vertices[static_cast<size_t>(i)][0] = to_string(cell.vertices[static_cast<size_t>(i)].first);
            c.vertices[static_cast<size_t>(i)][1] = to_string(cell.vertices[static_cast<size_t>(i)].second);
        }
        doc.cells.push_back(std::move(c));
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Selftest battery

namespace {

struct CheckOutcome {
    bool pass = false;
    std::string detail;
};

CheckOutcome check_boundary_digits() {
    TripMapSpec eee = TripMapSpec::parse("e,e,e");
    auto pt = [](const char* x, const char* y) {
        return TrianglePoint::make(parse_rational(x), parse_rational(y));
    };
    if (digit_of(eee, pt("1/2", "1/10")) != 4) return {false, "digit of (1/2, 1/10) != 4"};
    if (digit_of(eee, pt("2/7", "1/7")) != 4) return {false, "digit of (2/7, 1/7) != 4"};
    if (digit_of(eee, pt("1/2", "1/2")) != 0) return {false, "digit of (1/2, 1/2) != 0"};
    return {true, "exact-integer boundary digits take the smaller branch"};
}

CheckOutcome check_classical_sequence() {
    PolyQ p = parse_cubic("x^3+x^2+x-1");
    FieldPtr field = fields_in_unit_interval(p).at(0);
    FieldElement u = FieldElement::generator(field);
    OrbitResult orbit =
        trip_sequence(TripMapSpec::parse("e,e,e"), TrianglePoint::make(u, u * u), 10);
    if (orbit.stop != OrbitStop::Completed) return {false, "orbit stopped early"};
    for (long d : orbit.digits)
        if (d != 1) return {false, "unexpected digit " + std::to_string(d)};
    return {true, "first 10 digits of the x^3+x^2+x-1 pair are all 1"};
}

CheckOutcome check_theorem_matrix() {
    MatrixZ want({{{0, 0, -1}, {1, 0, 1}, {0, 1, 1}}});
    if (theorem_matrix(2, 1, 1) != want) return {false, "matrix (2,1,1) mismatch"};
    return {true, "display matrix equals its digit-matrix factor product"};
}

CheckOutcome check_unit_pipeline() {
    UnitReportDoc doc = unit_report_doc(parse_cubic("x^3+x^2-1"));
    if (doc.results.size() != 1) return {false, "expected one result"};
    const UnitResultDoc& r = doc.results[0];
    if (r.formId != 4 || r.P != "1" || r.Q != "2") return {false, "canonical form mismatch"};
    if (r.combo != "class:3,n:1") return {false, "combo mismatch"};
    if (r.periodicity.status != "proven-by-revisit" || r.periodicity.preperiod != 0 ||
        r.periodicity.period != 1)
        return {false, "periodicity mismatch"};
    return {true, "x^3+x^2-1 -> form 4 (1,2), class 3 n=1, period (0,1)"};
}

CheckOutcome check_hermite_rational() {
    TrianglePoint p = TrianglePoint::make(parse_rational("7/10"), parse_rational("1/5"));
    PeriodicSearchResult res = find_periodic_row(p, 6);
    if (res.found) return {false, "rational pair reported periodic"};
    if (res.scanned != 6) return {false, "scan stopped early"};
    return {true, "rational pair: found=false after 6 degenerate rows"};
}

CheckOutcome check_partition_geometry(unsigned long seed) {
    TripMapSpec eee = TripMapSpec::parse("e,e,e");
    const long cap = 8;
    std::vector<PartitionCell> cells = partition_cells(eee, 1, cap);
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> draw(1, 1000);
    int tested = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::array<long, 3> s{draw(gen), draw(gen), draw(gen)};
        std::sort(s.begin(), s.end(), std::greater<>());
        if (s[2] == 0) continue;
        Rational x(s[1], s[0]);
        Rational y(s[2], s[0]);
        long digit = -1;
        try {
            digit = digit_of(eee, TrianglePoint::make(x, y));
        } catch (const MapError&) {
            continue; // boundary orbit: no digit to cross-check
        }
        long strictHits = 0;
        long strictCell = -1;
        for (size_t j = 0; j < cells.size(); ++j) {
            if (cell_contains_strict(cells[j], x, y)) {
                ++strictHits;
                strictCell = static_cast<long>(j);
            }
        }
        if (strictHits > 1) return {false, "two cells strictly contain one point"};
        if (digit <= cap) {
            if (!cell_contains(cells[static_cast<size_t>(digit)], x, y))
                return {false, "digit-" + std::to_string(digit) + " cell misses its point"};
            if (strictHits == 1 && strictCell != digit)
                return {false, "point strictly inside the wrong cell"};
        } else if (strictHits != 0) {
            return {false, "point with digit > cap strictly inside an enumerated cell"};
        }
        ++tested;
    }
    if (tested < 100) return {false, "too few usable samples"};
    return {true, std::to_string(tested) + " sampled points agree with the cell geometry"};
}

CheckOutcome check_json_round_trip() {
    TrianglePoint p = TrianglePoint::make(parse_rational("7/10"), parse_rational("1/5"));
    SequenceDoc doc = sequence_doc(TripMapSpec::parse("e,e,e"), p, 5);
    nlohmann::json j = nlohmann::json::parse(render_json(doc));
    if (j.get<SequenceDoc>() != doc) return {false, "sequence document did not round-trip"};
    return {true, "sequence document round-trips through JSON"};
}

} // namespace

SelftestDoc selftest_doc(unsigned long seed) {
    SelftestDoc doc;
    doc.seed = seed;
    auto add = [&doc](const char* name, auto&& fn) {
        CheckDoc check;
        check.name = name;
        try {
            CheckOutcome out = fn();
            check.pass = out.pass;
            check.detail = out.detail;
        } catch (const std::exception& e) {
            check.pass = false;
            check.detail = std::string("exception: ") + e.what();
        }
        doc.checks.push_back(std::move(check));
    };
    add("boundary-digits", check_boundary_digits);
    add("classical-sequence", check_classical_sequence);
    add("theorem-matrix", check_theorem_matrix);
    add("unit-pipeline", check_unit_pipeline);
    add("hermite-rational", check_hermite_rational);
    add("partition-geometry", [seed] { return check_partition_geometry(seed); });
    add("json-round-trip", check_json_round_trip);
    doc.allPass = std::all_of(doc.checks.begin(), doc.checks.end(),
                              [](const CheckDoc& c) { return c.pass; });
    return doc;
}

// ---------------------------------------------------------------------------
// Text renderers

std::string render_text(const SequenceDoc& doc) {
    std::ostringstream out;
    out << "map " << doc.map << "\n";
    out << "start (" << doc.start.x.display << ", " << doc.start.y.display << ")\n";
    out << "digits (" << doc.digits.size() << "): " << join_longs(doc.digits, " ") << "\n";
    out << "termination: " << doc.termination;
    if (!doc.note.empty()) out << " — " << doc.note;
    out << "\n";
    for (size_t i = 0; i < doc.points.size(); ++i)
        out << "  step " << i << ": (" << doc.points[i].x.display << ", "
            << doc.points[i].y.display << ")\n";
    return out.str();
}

std::string render_text(const VerifyDoc& doc) {
    std::ostringstream out;
    out << "theorem " << doc.theorem << ": " << doc.checked << " checked, " << doc.reducible
        << " reducible, " << doc.rejected << " rejected — "
        << (doc.allPass ? "all pass" : "FAILURES") << "\n";
    for (const VerifyCellDoc& c : doc.cells) {
        out << "  A=" << c.A << " B=" << c.B << " [" << c.status << "]";
        if (c.status == "rejected") {
            out << " " << c.detail << "\n";
            continue;
        }
        out << " matrix=" << yes_no(c.matrixOK) << " eigen=" << yes_no(c.eigenOK);
        out << " period=" << (c.status == "reducible" ? "n/a" : yes_no(c.periodOK));
        if (!c.detail.empty()) out << " — " << c.detail;
        out << "\n";
    }
    return out.str();
}

std::string render_text(const UnitReportDoc& doc) {
    std::ostringstream out;
    out << "input " << doc.input << "\n";
    for (size_t i = 0; i < doc.results.size(); ++i) {
        const UnitResultDoc& r = doc.results[i];
        out << "root " << (i + 1) << " of " << doc.results.size() << ":\n";
        out << "  form " << r.formId << " (P=" << r.P << ", Q=" << r.Q << "): " << r.formEquation
            << "\n";
        out << "  v = " << r.v.display << ", root of " << r.fieldPoly << " in " << r.rootInterval
            << "\n";
        for (const ChainStepDoc& s : r.chain)
            out << "  case " << s.caseId << ": " << s.input << " -> " << s.output << " ["
                << s.map << "]\n";
        out << "  pair (" << r.pair.x.display << ", " << r.pair.y.display << ")  combo "
            << r.combo << "\n";
        out << "  periodicity: " << r.periodicity.status << ", preperiod "
            << r.periodicity.preperiod << ", period " << r.periodicity.period << ", cycle "
            << tuples_display(r.periodicity.tuples) << "\n";
        out << "  discriminant of input: " << r.discriminant << "\n";
    }
    return out.str();
}

namespace {

std::string hermite_row_line(const HermiteRowDoc& r) {
    std::ostringstream out;
    out << "row " << r.index << " [" << r.combo << "] digits: " << join_longs(r.digits, " ")
        << " [" << r.termination << "]";
    if (r.periodic)
        out << " periodic: preperiod " << r.periodicity.preperiod << ", period "
            << r.periodicity.period << ", cycle " << tuples_display(r.periodicity.tuples);
    else
        out << " periodicity: " << r.periodicity.status;
    return out.str();
}

} // namespace

std::string render_text(const HermiteReportDoc& doc) {
    std::ostringstream out;
    out << "pair (" << doc.start.x.display << ", " << doc.start.y.display << ")\n";
    for (const HermiteRowDoc& r : doc.rows) out << "  " << hermite_row_line(r) << "\n";
    if (doc.search.found)
        out << "search: periodic row found at index " << doc.search.row.index << " ["
            << doc.search.row.combo << "] after scanning " << doc.search.scanned << " rows\n";
    else
        out << "search: no periodic row in " << doc.search.scanned << " rows — " << doc.search.note
            << "\n";
    return out.str();
}

std::string render_text(const PartitionDoc& doc) {
    std::ostringstream out;
    out << "map " << doc.map << ", depth " << doc.depth << ", digits 0.." << doc.perLevelMax
        << ": " << doc.cells.size() << " cells\n";
    for (const PartitionCellDoc& c : doc.cells) {
        out << "  cell " << join_longs(c.word, ".") << ": vertices";
        for (const auto& v : c.vertices) out << " (" << v[0] << ", " << v[1] << ")";
        out << "\n";
    }
    return out.str();
}

std::string render_text(const SelftestDoc& doc) {
    std::ostringstream out;
    out << "selftest (seed " << doc.seed << ")\n";
    for (const CheckDoc& c : doc.checks)
        out << "  [" << (c.pass ? " ok " : "FAIL") << "] " << c.name << " — " << c.detail << "\n";
    out << (doc.allPass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// CSV renderers (digit tuples are flattened by concatenation)

std::string render_csv(const SequenceDoc& doc) {
    std::ostringstream out;
    out << "step,digit,x,y\n";
    for (size_t i = 0; i < doc.digits.size(); ++i) {
        out << (i + 1) << "," << doc.digits[i] << ",";
        if (i + 1 < doc.points.size())
            out << csv_quote(doc.points[i + 1].x.display) << ","
                << csv_quote(doc.points[i + 1].y.display);
        else
            out << ",";
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const VerifyDoc& doc) {
    std::ostringstream out;
    out << "theorem,A,B,status,matrixOK,eigenOK,periodOK,detail\n";
    for (const VerifyCellDoc& c : doc.cells)
        out << doc.theorem << "," << c.A << "," << c.B << "," << c.status << ","
            << yes_no(c.matrixOK) << "," << yes_no(c.eigenOK) << "," << yes_no(c.periodOK) << ","
            << csv_quote(c.detail) << "\n";
    return out.str();
}

std::string render_csv(const UnitReportDoc& doc) {
    std::ostringstream out;
    out << "root,formId,P,Q,formEquation,v,combo,status,preperiod,period,cycleDigits,discriminant\n";
    for (size_t i = 0; i < doc.results.size(); ++i) {
        const UnitResultDoc& r = doc.results[i];
        std::vector<long> flat;
        for (const TupleDoc& t : r.periodicity.tuples) {
            flat.insert(flat.end(), t.ms.begin(), t.ms.end());
            flat.push_back(t.k);
        }
        out << (i + 1) << "," << r.formId << "," << r.P << "," << r.Q << ","
            << csv_quote(r.formEquation) << "," << csv_quote(r.v.display) << ","
            << csv_quote(r.combo) << "," << r.periodicity.status << "," << r.periodicity.preperiod
            << "," << r.periodicity.period << "," << join_longs(flat, " ") << ","
            << csv_quote(r.discriminant) << "\n";
    }
    return out.str();
}

std::string render_csv(const HermiteReportDoc& doc) {
    std::ostringstream out;
    out << "row,combo,digits,termination,periodic,preperiod,period,cycleDigits\n";
    for (const HermiteRowDoc& r : doc.rows) {
        std::vector<long> flat;
        for (const TupleDoc& t : r.periodicity.tuples) {
            flat.insert(flat.end(), t.ms.begin(), t.ms.end());
            flat.push_back(t.k);
        }
        out << r.index << "," << csv_quote(r.combo) << "," << join_longs(r.digits, " ") << ","
            << r.termination << "," << yes_no(r.periodic) << "," << r.periodicity.preperiod << ","
            << r.periodicity.period << "," << join_longs(flat, " ") << "\n";
    }
    return out.str();
}

std::string render_csv(const PartitionDoc& doc) {
    std::ostringstream out;
    out << "word,v0x,v0y,v1x,v1y,v2x,v2y\n";
    for (const PartitionCellDoc& c : doc.cells) {
        out << join_longs(c.word, ".");
        for (const auto& v : c.vertices) out << "," << v[0] << "," << v[1];
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const SelftestDoc& doc) {
    std::ostringstream out;
    out << "name,pass,detail\n";
    for (const CheckDoc& c : doc.checks)
        out << c.name << "," << yes_no(c.pass) << "," << csv_quote(c.detail) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// SVG renderer

std::string partition_svg(const PartitionDoc& doc) {
    const double size = 640.0;
    const double margin = 40.0;
    const double canvas = size + 2 * margin;
    auto px = [&](double x) { return margin + x * size; };
    auto py = [&](double y) { return margin + (1.0 - y) * size; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\""
        << canvas << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n";
    out << "<!-- map " << doc.map << ", depth " << doc.depth << ", digits 0.." << doc.perLevelMax
        << " -->\n";
    for (size_t i = 0; i < doc.cells.size(); ++i) {
        const PartitionCellDoc& c = doc.cells[i];
        out << "  <polygon points=\"";
        for (const auto& v : c.vertices) {
            double x = parse_rational(v[0]).get_d();
            double y = parse_rational(v[1]).get_d();
            out << px(x) << "," << py(y) << " ";
        }
        out << "\" fill=\"hsl(" << (i * 47) % 360
            << ",70%,75%)\" fill-opacity=\"0.6\" stroke=\"#333\" stroke-width=\"1\">";
        out << "<title>cell " << join_longs(c.word, ".");
        for (const auto& v : c.vertices) out << " (" << v[0] << ", " << v[1] << ")";
        out << "</title></polygon>\n";
    }
    // Outline of the whole parameter triangle 1 >= x >= y > 0.
    out << "  <polygon points=\"" << px(0) << "," << py(0) << " " << px(1) << "," << py(0) << " "
        << px(1) << "," << py(1) << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace tripcf
