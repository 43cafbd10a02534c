#include "tripcf/combo.hpp"

#include "tripcf/errors.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace tripcf {

namespace {

long parse_long_field(std::string_view text, const std::string& what) {
    try {
        size_t used = 0;
        std::string s(text);
        long v = std::stol(s, &used);
        if (used != s.size()) throw ParseError("trailing characters in " + what + ": '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("cannot parse " + what + ": '" + std::string(text) + "'");
    }
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void check_class_id(int classId) {
    if (classId < 1 || classId > 3)
        throw ParameterRange("combo class must be 1, 2, or 3; got " + std::to_string(classId));
}

} // namespace

ComboSpec ComboSpec::parse(std::string_view text) {
    std::string_view s = strip(text);
    size_t comma = s.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("combo spec must look like 'class:1,n:2'; got '" + std::string(text) + "'");
    std::string_view classPart = strip(s.substr(0, comma));
    std::string_view nPart = strip(s.substr(comma + 1));
    if (classPart.substr(0, 6) != "class:" || nPart.substr(0, 2) != "n:")
        throw ParseError("combo spec must look like 'class:1,n:2'; got '" + std::string(text) + "'");
    ComboSpec spec;
    long cls = parse_long_field(strip(classPart.substr(6)), "combo class");
    if (cls < 1 || cls > 3)
        throw ParseError("combo class must be 1, 2, or 3; got " + std::to_string(cls));
    spec.classId = static_cast<int>(cls);
    spec.n = parse_long_field(strip(nPart.substr(2)), "combo repeat count");
    if (spec.n < 0)
        throw ParseError("combo repeat count must be >= 0; got " + std::to_string(spec.n));
    return spec;
}

std::string ComboSpec::str() const {
    return "class:" + std::to_string(classId) + ",n:" + std::to_string(n);
}

TripMapSpec combo_repeat_spec(int classId) {
    check_class_id(classId);
    static const TripMapSpec repeat12 = TripMapSpec::parse("e,(132),(132)");
    static const TripMapSpec repeat3 = TripMapSpec::parse("(13),(12),e");
    return classId == 3 ? repeat3 : repeat12;
}

TripMapSpec combo_close_spec(int classId) {
    check_class_id(classId);
    static const TripMapSpec close1 = TripMapSpec::parse("e,e,e");
    static const TripMapSpec close2 = TripMapSpec::parse("e,(23),e");
    static const TripMapSpec close3 = TripMapSpec::parse("(23),(23),e");
    switch (classId) {
        case 1: return close1;
        case 2: return close2;
        default: return close3;
    }
}

std::string DigitTuple::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < ms.size(); ++i) {
        if (i) out << ',';
        out << ms[i];
    }
    out << ';' << k << ')';
    return out.str();
}

std::vector<long> DigitTuple::flattened() const {
    std::vector<long> all = ms;
    all.push_back(k);
    return all;
}

ComboStep combo_apply(const ComboSpec& spec, const TrianglePoint& p, long maxK) {
    const TripMapSpec repeat = combo_repeat_spec(spec.classId);
    const TripMapSpec close = combo_close_spec(spec.classId);
    DigitTuple tuple;
    tuple.ms.reserve(static_cast<size_t>(spec.n));
    TrianglePoint cur = p;
    for (long i = 0; i < spec.n; ++i) {
        StepResult step = apply_map(repeat, cur, maxK);
        tuple.ms.push_back(step.digit);
        cur = step.point;
    }
    StepResult step = apply_map(close, cur, maxK);
    tuple.k = step.digit;
    return ComboStep{step.point, std::move(tuple)};
}

namespace {

/// The corner (1,1) carries no further expansion information: every map of
/// the family either sends it onto the boundary y' = 0 or fixes it
/// projectively (the homogeneous triple is (1,1,1)). Combo iteration treats
/// reaching it as a degenerate stop.
bool at_corner(const TrianglePoint& p) {
    return p.x() == FieldElement(1) && p.y() == FieldElement(1);
}

const char* kCornerNote = "orbit reached the corner (1, 1), which carries no further digits";

} // namespace

ComboSequence combo_sequence(const ComboSpec& spec, const TrianglePoint& p, int length,
                             long maxK) {
    ComboSequence seq;
    seq.points.push_back(p);
    TrianglePoint cur = p;
    for (int i = 0; i < length; ++i) {
        if (at_corner(cur)) {
            seq.stop = OrbitStop::Degenerate;
            seq.note = kCornerNote;
            return seq;
        }
        try {
            ComboStep step = combo_apply(spec, cur, maxK);
            cur = step.point;
            seq.tuples.push_back(std::move(step.tuple));
            seq.points.push_back(cur);
        } catch (const DegenerateOrbit& e) {
            seq.stop = OrbitStop::Degenerate;
            seq.note = "combo application " + std::to_string(i) + " stopped: " + e.what();
            return seq;
        } catch (const NoDigit& e) {
            seq.stop = OrbitStop::NoDigit;
            seq.note = "combo application " + std::to_string(i) + " stopped: " + e.what();
            return seq;
        }
    }
    return seq;
}

std::string periodicity_status_name(PeriodicityStatus s) {
    switch (s) {
        case PeriodicityStatus::ProvenByRevisit: return "proven-by-revisit";
        case PeriodicityStatus::UnknownCapReached: return "unknown-cap-reached";
        case PeriodicityStatus::Degenerate: return "degenerate";
    }
    return "?";
}

namespace {

/// Exact state key: field identities plus the coefficient triples of both
/// coordinates (mpq_class keeps coefficients canonical, so string equality is
/// value equality).
std::string state_key(const TrianglePoint& p) {
    std::ostringstream out;
    out << static_cast<const void*>(p.x().field().get()) << '|'
        << static_cast<const void*>(p.y().field().get());
    for (const FieldElement* e : {&p.x(), &p.y()})
        for (const Rational& c : e->coeffs()) out << '|' << c.get_str();
    return out.str();
}

} // namespace

PeriodicityReport detect_periodicity(const ComboSpec& spec, const TrianglePoint& p,
                                     int capIterations, long maxK) {
    PeriodicityReport report;
    std::map<std::string, long> seen;
    std::vector<DigitTuple> tuples;
    TrianglePoint cur = p;
    for (long i = 0; i < capIterations; ++i) {
        if (at_corner(cur)) {
            report.status = PeriodicityStatus::Degenerate;
            report.note = kCornerNote;
            return report;
        }
        auto [it, inserted] = seen.emplace(state_key(cur), i);
        if (!inserted) {
            report.status = PeriodicityStatus::ProvenByRevisit;
            report.preperiod = it->second;
            report.period = i - it->second;
            report.tuples.assign(tuples.begin() + it->second, tuples.end());
            report.note = "state at combo application " + std::to_string(i) +
                          " equals state at " + std::to_string(it->second);
            return report;
        }
        try {
            ComboStep step = combo_apply(spec, cur, maxK);
            cur = step.point;
            tuples.push_back(std::move(step.tuple));
        } catch (const MapError& e) {
            report.status = PeriodicityStatus::Degenerate;
            report.note = "combo application " + std::to_string(i) + " stopped: " + e.what();
            return report;
        }
    }
    report.status = PeriodicityStatus::UnknownCapReached;
    report.note = "no revisit within " + std::to_string(capIterations) + " combo applications";
    return report;
}

// ---------------------------------------------------------------------------
// Theorem machinery

namespace {

void check_theorem_range(int classId, long A, long B) {
    check_class_id(classId);
    bool ok = false;
    switch (classId) {
        case 1: ok = A >= 0 && B >= 1; break;
        case 2: ok = A >= 1 && B >= 1; break;
        case 3: ok = A >= 1 && B > A; break;
    }
    if (!ok)
        throw ParameterRange("class " + std::to_string(classId) + " needs " +
                             (classId == 1 ? "A >= 0, B >= 1"
                                           : (classId == 2 ? "A >= 1, B >= 1" : "B > A >= 1")) +
                             "; got A=" + std::to_string(A) + ", B=" + std::to_string(B));
}

} // namespace

PolyQ theorem_polynomial(int classId, long A, long B) {
    check_theorem_range(classId, A, B);
    switch (classId) {
        case 1: return PolyQ::monic_cubic(Rational(A), Rational(B), Rational(-1));
        case 2: return PolyQ::monic_cubic(Rational(-A), Rational(-B), Rational(1));
        default: return PolyQ::monic_cubic(Rational(-A), Rational(B), Rational(-1));
    }
}

std::vector<std::pair<TripMapSpec, long>> theorem_factors(int classId, long A, long B) {
    check_theorem_range(classId, A, B);
    std::vector<std::pair<TripMapSpec, long>> factors;
    const TripMapSpec repeat = combo_repeat_spec(classId);
    const TripMapSpec close = combo_close_spec(classId);
    long repeatCount = classId == 3 ? A : B - 1;
    long repeatDigit = classId == 3 ? 0 : 1;
    long closeDigit = 0;
    switch (classId) {
        case 1: closeDigit = A; break;
        case 2: closeDigit = A - 1; break;
        default: closeDigit = 2 * (B - A) - 2; break;
    }
    factors.reserve(static_cast<size_t>(repeatCount) + 1);
    for (long i = 0; i < repeatCount; ++i) factors.emplace_back(repeat, repeatDigit);
    factors.emplace_back(close, closeDigit);
    return factors;
}

MatrixZ theorem_matrix(int classId, long A, long B) {
    check_theorem_range(classId, A, B);
    MatrixZ display;
    switch (classId) {
        case 1: display = MatrixZ({{{0, 0, 1}, {1, 0, -B}, {0, 1, -A}}}); break;
        case 2: display = MatrixZ({{{0, 0, -1}, {1, 0, B}, {0, 1, A}}}); break;
        default: display = MatrixZ({{{0, 0, -1}, {1, 1, 1 + B - A}, {0, -1, -1 + A}}}); break;
    }
    MatrixZ product = MatrixZ::identity();
    for (const auto& [spec, digit] : theorem_factors(classId, A, B))
        product = product * digit_matrix(spec, digit);
    if (product != display)
        throw Error("theorem matrix factorization mismatch for class " + std::to_string(classId) +
                    ", A=" + std::to_string(A) + ", B=" + std::to_string(B) + ": product " +
                    product.str() + " vs display " + display.str());
    return display;
}

ComboSpec theorem_combo(int classId, long A, long B) {
    check_theorem_range(classId, A, B);
    ComboSpec spec;
    spec.classId = classId;
    spec.n = classId == 3 ? A : B - 1;
    return spec;
}

DigitTuple expected_theorem_tuple(int classId, long A, long B) {
    check_theorem_range(classId, A, B);
    DigitTuple tuple;
    long repeatCount = classId == 3 ? A : B - 1;
    tuple.ms.assign(static_cast<size_t>(repeatCount), classId == 3 ? 0 : 1);
    switch (classId) {
        case 1: tuple.k = A; break;
        case 2: tuple.k = A - 1; break;
        default: tuple.k = 2 * (B - A) - 2; break;
    }
    return tuple;
}

TrianglePoint theorem_point(int classId, long A, long B) {
    PolyQ p = theorem_polynomial(classId, A, B);
    std::vector<FieldPtr> fields = fields_in_unit_interval(p);
    if (fields.size() != 1)
        throw Error("class " + std::to_string(classId) + " polynomial " + p.str() + " has " +
                    std::to_string(fields.size()) + " roots in (0,1); expected exactly 1");
    FieldElement u = FieldElement::generator(fields.front());
    FieldElement usq = u * u;
    if (classId == 3) return TrianglePoint::make(u, u - usq);
    return TrianglePoint::make(u, usq);
}

EigenCheck left_eigencheck(const MatrixZ& M, const FieldElement& e1, const FieldElement& e2) {
    std::array<FieldElement, 3> row{FieldElement(1), e1, e2};
    std::array<FieldElement, 3> image;
    for (int j = 0; j < 3; ++j) {
        FieldElement sum;
        for (int i = 0; i < 3; ++i) sum = sum + row[i] * FieldElement(Rational(M.at(i, j)));
        image[j] = sum;
    }
    EigenCheck result;
    result.eigenvalue = image[0];
    result.isEigen = image[1] == image[0] * e1 && image[2] == image[0] * e2;
    return result;
}

bool theorem_eigen_identity(int classId, long A, long B) {
    check_theorem_range(classId, A, B);
    const PolyQ p = theorem_polynomial(classId, A, B);
    const MatrixZ M = theorem_matrix(classId, A, B);
    const PolyQ x = PolyQ::x();
    const PolyQ xsq = x * x;
    std::array<PolyQ, 3> b{PolyQ::constant(Rational(1)), x, classId == 3 ? x - xsq : xsq};
    for (int j = 0; j < 3; ++j) {
        PolyQ image;
        for (int i = 0; i < 3; ++i) image = image + b[i] * Rational(M.at(i, j));
        PolyQ diff = image - x * b[j];
        if (!divmod(diff, p).second.is_zero()) return false;
    }
    return true;
}

TrianglePoint forced_apply(const std::vector<std::pair<TripMapSpec, long>>& steps,
                           const TrianglePoint& p) {
    TrianglePoint cur = p;
    for (const auto& [spec, digit] : steps) cur = apply_digit(spec, digit, cur);
    return cur;
}

} // namespace tripcf
