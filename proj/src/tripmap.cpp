#include "tripcf/tripmap.hpp"

#include "tripcf/errors.hpp"

#include <sstream>
#include <utility>

namespace tripcf {

// ---------------------------------------------------------------------------
// TripMapSpec

TripMapSpec TripMapSpec::parse(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw ParseError("map spec needs three permutations, got '" + std::string(text) + "'");
    return TripMapSpec{Perm3::parse(parts[0]), Perm3::parse(parts[1]), Perm3::parse(parts[2])};
}

const std::vector<TripMapSpec>& TripMapSpec::all() {
    static const std::vector<TripMapSpec> specs = [] {
        std::vector<TripMapSpec> v;
        v.reserve(216);
        for (const Perm3& s : Perm3::all())
            for (const Perm3& t0 : Perm3::all())
                for (const Perm3& t1 : Perm3::all()) v.push_back(TripMapSpec{s, t0, t1});
        return v;
    }();
    return specs;
}

std::string TripMapSpec::str() const {
    return sigma.str() + "," + tau0.str() + "," + tau1.str();
}

// ---------------------------------------------------------------------------
// TrianglePoint

bool in_triangle(const FieldElement& x, const FieldElement& y) {
    return sign_of(y) > 0 && sign_of(x - y) >= 0 && sign_of(FieldElement(Rational(1)) - x) >= 0;
}

TrianglePoint TrianglePoint::make(FieldElement x, FieldElement y) {
    if (!in_triangle(x, y))
        throw Error("point (" + x.str() + ", " + y.str() + ") violates 1 >= x >= y > 0");
    return TrianglePoint(std::move(x), std::move(y));
}

TrianglePoint TrianglePoint::make(const Rational& x, const Rational& y) {
    return make(FieldElement(x), FieldElement(y));
}

std::string TrianglePoint::str() const { return "(" + x_.str() + ", " + y_.str() + ")"; }

// ---------------------------------------------------------------------------
// Matrices of one map

std::pair<MatrixZ, MatrixZ> build_F(const TripMapSpec& spec) {
    MatrixZ s = MatrixZ::permutation(spec.sigma);
    return {s * mat_A0() * MatrixZ::permutation(spec.tau0),
            s * mat_A1() * MatrixZ::permutation(spec.tau1)};
}

MatrixZ digit_matrix(const TripMapSpec& spec, long k) {
    if (k < 0) throw ParameterRange("digit_matrix: k must be nonnegative");
    auto [f0, f1] = build_F(spec);
    return (mat_B() * f0.inverse_unimodular() * f1.inverse_unimodular().pow(k) * mat_Binv())
        .transpose();
}

std::array<FieldElement, 3> homogeneous_image(const MatrixZ& M, const TrianglePoint& p) {
    std::array<FieldElement, 3> out;
    for (int j = 0; j < 3; ++j) {
        out[j] = FieldElement(Rational(M.at(0, j))) +
                 p.x() * FieldElement(Rational(M.at(1, j))) +
                 p.y() * FieldElement(Rational(M.at(2, j)));
    }
    return out;
}

std::pair<FieldElement, FieldElement> project_pair(const std::array<FieldElement, 3>& t) {
    if (t[0].is_zero()) throw ProjectionPole("projection pole: homogeneous first coordinate is 0");
    return {t[1] / t[0], t[2] / t[0]};
}

bool triple_in_cone(const std::array<FieldElement, 3>& t) {
    return sign_of(t[2]) > 0 && sign_of(t[1] - t[2]) >= 0 && sign_of(t[0] - t[1]) >= 0;
}

// ---------------------------------------------------------------------------
// Digits

namespace {

// Walks candidate digits k = 0, 1, ... with one incremental matrix product
// per step instead of recomputing F1^-k from scratch.
class DigitScanner {
public:
    explicit DigitScanner(const TripMapSpec& spec) {
        auto [f0, f1] = build_F(spec);
        invF1_ = f1.inverse_unimodular();
        acc_ = mat_B() * f0.inverse_unimodular();
    }

    MatrixZ current_digit_matrix() const { return (acc_ * mat_Binv()).transpose(); }
    void advance() { acc_ = acc_ * invF1_; }

private:
    MatrixZ invF1_;
    MatrixZ acc_;
};

} // namespace

long digit_of(const TripMapSpec& spec, const TrianglePoint& p, long maxDigit) {
    if (maxDigit < 0) throw ParameterRange("digit_of: maxDigit must be nonnegative");
    DigitScanner scan(spec);
    bool boundaryHit = false;
    for (long k = 0; k <= maxDigit; ++k, scan.advance()) {
        auto t = homogeneous_image(scan.current_digit_matrix(), p);
        int sy = sign_of(t[2]);
        if (sy < 0) continue;
        if (sign_of(t[1] - t[2]) < 0 || sign_of(t[0] - t[1]) < 0) continue;
        if (sy > 0) return k;
        boundaryHit = true; // qualifies except y' = 0: image on the bottom edge
    }
    if (boundaryHit)
        throw DegenerateOrbit("digit_of: point " + p.str() + " maps onto the boundary y' = 0");
    throw NoDigit("digit_of: no digit k <= " + std::to_string(maxDigit) + " admits " + p.str());
}

TrianglePoint apply_digit(const TripMapSpec& spec, long k, const TrianglePoint& p) {
    auto [x, y] = project_pair(homogeneous_image(digit_matrix(spec, k), p));
    return TrianglePoint::make(std::move(x), std::move(y));
}

StepResult apply_map(const TripMapSpec& spec, const TrianglePoint& p, long maxDigit) {
    long k = digit_of(spec, p, maxDigit);
    return StepResult{k, apply_digit(spec, k, p)};
}

std::string orbit_stop_name(OrbitStop s) {
    switch (s) {
        case OrbitStop::Completed: return "completed";
        case OrbitStop::Degenerate: return "degenerate";
        case OrbitStop::NoDigit: return "no-digit";
    }
    return "?";
}

OrbitResult trip_sequence(const TripMapSpec& spec, const TrianglePoint& p, int count,
                          long maxDigit) {
    OrbitResult out;
    out.points.push_back(p);
    for (int i = 0; i < count; ++i) {
        try {
            StepResult step = apply_map(spec, out.points.back(), maxDigit);
            out.digits.push_back(step.digit);
            out.points.push_back(step.point);
        } catch (const DegenerateOrbit& e) {
            out.stop = OrbitStop::Degenerate;
            out.note = e.what();
            return out;
        } catch (const NoDigit& e) {
            out.stop = OrbitStop::NoDigit;
            out.note = e.what();
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named maps

const std::vector<NamedMap>& all_named_maps() {
    static const std::vector<NamedMap> v = {NamedMap::E132132, NamedMap::Meee, NamedMap::Me23e,
                                            NamedMap::M1312e, NamedMap::M2323e};
    return v;
}

TripMapSpec named_spec(NamedMap m) {
    switch (m) {
        case NamedMap::E132132: return TripMapSpec::parse("e,(132),(132)");
        case NamedMap::Meee: return TripMapSpec::parse("e,e,e");
        case NamedMap::Me23e: return TripMapSpec::parse("e,(23),e");
        case NamedMap::M1312e: return TripMapSpec::parse("(13),(12),e");
        case NamedMap::M2323e: return TripMapSpec::parse("(23),(23),e");
    }
    throw Error("unknown named map");
}

std::string named_map_label(NamedMap m) { return named_spec(m).str(); }

namespace {

FieldElement checked_div(const FieldElement& num, const FieldElement& den) {
    if (den.is_zero()) throw ProjectionPole("closed form: zero denominator");
    return num / den;
}

} // namespace

std::pair<FieldElement, FieldElement> closed_form_pair(NamedMap m, long k,
                                                       const TrianglePoint& p) {
    if (k < 0) throw ParameterRange("closed_form_pair: k must be nonnegative");
    const FieldElement one{Rational(1)};
    const FieldElement& x = p.x();
    const FieldElement& y = p.y();
    switch (m) {
        case NamedMap::E132132: {
            if (k != 1)
                throw ParameterRange("T_{e,(132),(132)}: closed form published only for k = 1");
            FieldElement d = one - x;
            return {checked_div(x, d), checked_div(y, d)};
        }
        case NamedMap::Meee: {
            FieldElement kf{Rational(k)};
            return {checked_div(y, x), checked_div(one - x - kf * y, x)};
        }
        case NamedMap::Me23e: {
            FieldElement k1{Rational(k + 1)};
            return {checked_div(y, x), checked_div(k1 * y + x - one, x)};
        }
        case NamedMap::M1312e: {
            FieldElement d = one - FieldElement(Rational(k + 1)) * y;
            return {checked_div(x, d), checked_div(y, d)};
        }
        case NamedMap::M2323e: {
            long mHalf = k / 2;
            FieldElement m2{Rational(mHalf + 2)};
            if (k % 2 == 0) return {checked_div(x - y, x), checked_div(m2 * x - y - one, x)};
            return {checked_div(y, x), checked_div(m2 * x - one, x)};
        }
    }
    throw Error("unknown named map");
}

TrianglePoint closed_form_apply(NamedMap m, long k, const TrianglePoint& p) {
    auto [x, y] = closed_form_pair(m, k, p);
    return TrianglePoint::make(std::move(x), std::move(y));
}

// ---------------------------------------------------------------------------
// Partition cells

namespace {

void enumerate_cells(const MatrixZ& prefix, const MatrixZ& f0, const MatrixZ& f1,
                     std::vector<long>& word, int remaining, long perLevelMax,
                     std::vector<PartitionCell>& out) {
    if (remaining == 0) {
        PartitionCell cell;
        cell.word = word;
        cell.matrix = prefix;
        for (int j = 0; j < 3; ++j) {
            auto col = prefix.column(j);
            if (col[0] == 0)
                throw ProjectionPole("partition cell vertex at infinity");
            cell.vertices[j] = {Rational(col[1]) / Rational(col[0]),
                                Rational(col[2]) / Rational(col[0])};
        }
        out.push_back(std::move(cell));
        return;
    }
    MatrixZ power = MatrixZ::identity();
    for (long a = 0; a <= perLevelMax; ++a) {
        word.push_back(a);
        enumerate_cells(prefix * power * f0, f0, f1, word, remaining - 1, perLevelMax, out);
        word.pop_back();
        power = power * f1;
    }
}

} // namespace

std::vector<PartitionCell> partition_cells(const TripMapSpec& spec, int depth, long perLevelMax) {
    if (depth < 1) throw ParameterRange("partition_cells: depth must be >= 1");
    if (perLevelMax < 0) throw ParameterRange("partition_cells: perLevelMax must be >= 0");
    double total = 1;
    for (int i = 0; i < depth; ++i) {
        total *= static_cast<double>(perLevelMax + 1);
        if (total > 100000) throw ParameterRange("partition_cells: too many cells requested");
    }
    auto [f0, f1] = build_F(spec);
    std::vector<PartitionCell> out;
    std::vector<long> word;
    enumerate_cells(mat_B(), f0, f1, word, depth, perLevelMax, out);
    return out;
}

namespace {

// Sign of the cross product (b - a) x (p - a): which side of directed edge
// a -> b the point p lies on.
int edge_side(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b,
              const Rational& px, const Rational& py) {
    Rational cross =
        (b.first - a.first) * (py - a.second) - (b.second - a.second) * (px - a.first);
    return sign(cross);
}

bool cell_contains_impl(const PartitionCell& cell, const Rational& x, const Rational& y,
                        bool strict) {
    const auto& v = cell.vertices;
    int orientation = edge_side(v[0], v[1], v[2].first, v[2].second);
    if (orientation == 0) return false; // degenerate triangle
    for (int i = 0; i < 3; ++i) {
        int s = edge_side(v[i], v[(i + 1) % 3], x, y);
        if (s == -orientation) return false;
        if (strict && s == 0) return false;
    }
    return true;
}

} // namespace

bool cell_contains(const PartitionCell& cell, const Rational& x, const Rational& y) {
    return cell_contains_impl(cell, x, y, false);
}

bool cell_contains_strict(const PartitionCell& cell, const Rational& x, const Rational& y) {
    return cell_contains_impl(cell, x, y, true);
}

} // namespace tripcf
