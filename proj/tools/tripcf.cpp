// Command-line surface over the library: exact TRIP sequences, theorem
// verification grids, the cubic-unit pipeline, digit-matrix row search, and
// partition geometry, with text / JSON / CSV output.

#include "tripcf/errors.hpp"
#include "tripcf/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <utility>

namespace {

using namespace tripcf;

template <class Doc>
void emit(const Doc& doc, const std::string& format) {
    if (format == "json")
        std::cout << render_json(doc);
    else if (format == "csv")
        std::cout << render_csv(doc);
    else
        std::cout << render_text(doc);
}

// "lo:hi" or a single value "n" (meaning n:n).
std::pair<long, long> parse_grid_range(const std::string& text) {
    size_t colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            long v = std::stol(text);
            return {v, v};
        }
        long lo = std::stol(text.substr(0, colon));
        long hi = std::stol(text.substr(colon + 1));
        if (lo > hi) throw ParseError("empty range " + text);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw ParseError("expected 'lo:hi' or 'n', got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("range bound out of range in '" + text + "'");
    }
}

TrianglePoint pair_of_root(FieldPtr field, const std::string& pairSpec) {
    FieldElement u = FieldElement::generator(std::move(field));
    if (pairSpec == "alpha,alpha2") return TrianglePoint::make(u, u * u);
    if (pairSpec == "alpha,alpha-alpha2") return TrianglePoint::make(u, u - u * u);
    throw ParseError("pair must be 'alpha,alpha2' or 'alpha,alpha-alpha2', got '" + pairSpec +
                       "'");
}

TrianglePoint point_from_poly(const std::string& polyText, const std::string& pairSpec,
                              long rootIndex) {
    PolyQ p = parse_cubic(polyText);
    std::vector<FieldPtr> roots = fields_in_unit_interval(p);
    if (roots.empty()) throw NoRootInUnitInterval(p.str() + " has no root in (0, 1)");
    if (rootIndex < 0 || static_cast<size_t>(rootIndex) >= roots.size())
        throw ParameterRange("--root must be in [0, " + std::to_string(roots.size() - 1) +
                             "] for " + p.str());
    if (roots.size() > 1)
        std::cerr << "note: " << p.str() << " has " << roots.size()
                  << " roots in (0, 1); using root " << rootIndex << " (select with --root)\n";
    return pair_of_root(roots[static_cast<size_t>(rootIndex)], pairSpec);
}

// Accepts "p/q,p/q" or the combined "poly=<cubic>;pair=<spec>" syntax.
TrianglePoint parse_point_text(const std::string& text, long rootIndex) {
    if (text.rfind("poly=", 0) == 0) {
        size_t semi = text.find(';');
        if (semi == std::string::npos || text.compare(semi + 1, 5, "pair=") != 0)
            throw ParseError("expected 'poly=<cubic>;pair=<spec>', got '" + text + "'");
        return point_from_poly(text.substr(5, semi - 5), text.substr(semi + 6), rootIndex);
    }
    size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected 'x,y' rationals or 'poly=...;pair=...', got '" + text + "'");
    return TrianglePoint::make(parse_rational(text.substr(0, comma)),
                               parse_rational(text.substr(comma + 1)));
}

struct PointArgs {
    std::string point;
    std::string poly;
    std::string pair = "alpha,alpha2";
    long rootIndex = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--point", point,
                        "exact point: 'p/q,p/q' or 'poly=<cubic>;pair=<spec>'");
        cmd->add_option("--poly", poly, "monic integer cubic, e.g. x^3+x^2-1 or 1,1,0,-1");
        cmd->add_option("--pair", pair, "'alpha,alpha2' or 'alpha,alpha-alpha2'")
            ->capture_default_str();
        cmd->add_option("--root", rootIndex, "which (0,1) root of --poly to use")
            ->capture_default_str();
    }

    TrianglePoint resolve() const {
        if (!point.empty() && !poly.empty())
            throw ParseError("give either --point or --poly/--pair, not both");
        if (!point.empty()) return parse_point_text(point, rootIndex);
        if (!poly.empty()) return point_from_poly(poly, pair, rootIndex);
        throw ParseError("a point is required: --point or --poly (with optional --pair)");
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multidimensional continued-fraction toolkit"};
    app.require_subcommand(1);

    long maxDigit = 10000;
    int maxIter = 1000;
    long rows = 60;
    unsigned long seed = 0;
    std::string format = "text";
    app.add_option("--max-digit", maxDigit, "largest digit searched per step")
        ->capture_default_str();
    app.add_option("--max-iter", maxIter, "iteration cap for periodicity detection")
        ->capture_default_str();
    app.add_option("--rows", rows, "digit-matrix rows scanned")->capture_default_str();
    app.add_option("--seed", seed, "seed for sampled properties")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    // sequence
    auto* seqCmd = app.add_subcommand("sequence", "digits of a point under one of the 216 maps");
    std::string seqMap;
    int seqLen = 10;
    PointArgs seqPoint;
    seqCmd->add_option("--map", seqMap, "map spec 'sigma,tau0,tau1', e.g. 'e,(132),(132)'")
        ->required();
    seqCmd->add_option("--len", seqLen, "number of digits requested")->capture_default_str();
    seqPoint.attach(seqCmd);

    // verify
    auto* verCmd = app.add_subcommand("verify", "matrix/eigen/periodicity checks over an (A,B) grid");
    int verTheorem = 0;
    std::string verA, verB;
    verCmd->add_option("--theorem", verTheorem, "which statement to check: 1, 2 or 3")
        ->required()
        ->check(CLI::Range(1, 3));
    verCmd->add_option("--A", verA, "A range 'lo:hi' (default: the statement's full grid)");
    verCmd->add_option("--B", verB, "B range 'lo:hi' (default: the statement's full grid)");

    // unit
    auto* unitCmd = app.add_subcommand("unit", "canonicalize a unit cubic and verify periodicity");
    std::string unitPoly;
    unitCmd->add_option("--poly", unitPoly, "monic integer cubic with constant term +1 or -1")
        ->required();

    // hermite
    auto* herCmd = app.add_subcommand("hermite", "digit-matrix rows and first-periodic-row search");
    int herLen = 8;
    PointArgs herPoint;
    herCmd->add_option("--len", herLen, "digit tuples streamed per row")->capture_default_str();
    herPoint.attach(herCmd);

    // partition
    auto* parCmd = app.add_subcommand("partition", "cylinder-cell geometry of a map");
    std::string parMap = "e,e,e";
    int parDepth = 1;
    long parPerLevel = 5;
    std::string parSvg;
    parCmd->add_option("--map", parMap, "map spec")->capture_default_str();
    parCmd->add_option("--depth", parDepth, "cylinder depth (1..6)")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    parCmd->add_option("--per-level", parPerLevel, "largest digit enumerated per level")
        ->capture_default_str();
    parCmd->add_option("--svg", parSvg, "also write an SVG rendering to this file");

    // selftest
    app.add_subcommand("selftest", "deterministic cross-module smoke battery");

    // Allow the global flags to appear after the subcommand name as well.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (seqCmd->parsed()) {
            emit(sequence_doc(TripMapSpec::parse(seqMap), seqPoint.resolve(), seqLen, maxDigit),
                 format);
            return 0;
        }
        if (verCmd->parsed()) {
            std::pair<long, long> A{verTheorem == 1 ? 0 : 1, 10};
            std::pair<long, long> B{1, 10};
            if (!verA.empty()) A = parse_grid_range(verA);
            if (!verB.empty()) B = parse_grid_range(verB);
            VerifyDoc doc = verify_grid(verTheorem, A.first, A.second, B.first, B.second, maxIter);
            emit(doc, format);
            return doc.allPass ? 0 : 1;
        }
        if (unitCmd->parsed()) {
            emit(unit_report_doc(parse_cubic(unitPoly), PipelineCaps{maxIter, maxDigit}), format);
            return 0;
        }
        if (herCmd->parsed()) {
            emit(hermite_report_doc(herPoint.resolve(), rows, herLen,
                                    PipelineCaps{maxIter, maxDigit}),
                 format);
            return 0;
        }
        if (parCmd->parsed()) {
            PartitionDoc doc = partition_doc(TripMapSpec::parse(parMap), parDepth, parPerLevel);
            emit(doc, format);
            if (!parSvg.empty()) {
                std::ofstream out(parSvg);
                if (!out) throw Error("cannot write " + parSvg);
                out << partition_svg(doc);
                std::cerr << "wrote " << parSvg << "\n";
            }
            return 0;
        }
        // selftest
        SelftestDoc doc = selftest_doc(seed);
        emit(doc, format);
        return doc.allPass ? 0 : 1;
    } catch (const PipelineError& e) {
        std::cerr << "error in stage '" << e.stage << "': " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
