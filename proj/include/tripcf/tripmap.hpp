#pragma once

#include "tripcf/field.hpp"
#include "tripcf/matrix.hpp"
#include "tripcf/perm.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tripcf {

/// One of the 216 triangle maps, indexed by three permutations.
struct TripMapSpec {
    Perm3 sigma;
    Perm3 tau0;
    Perm3 tau1;

    /// Parses "sigma,tau0,tau1", e.g. "e,(132),(132)".
    static TripMapSpec parse(std::string_view text);
    /// All 216 members, sigma varying slowest.
    static const std::vector<TripMapSpec>& all();

    std::string str() const;
    bool operator==(const TripMapSpec& o) const {
        return sigma == o.sigma && tau0 == o.tau0 && tau1 == o.tau1;
    }
};

/// Point of the triangle {(x, y) : 1 >= x >= y > 0} with exact coordinates
/// (rational or cubic-irrational).
class TrianglePoint {
public:
    static TrianglePoint make(FieldElement x, FieldElement y);
    static TrianglePoint make(const Rational& x, const Rational& y);

    const FieldElement& x() const { return x_; }
    const FieldElement& y() const { return y_; }

    bool operator==(const TrianglePoint& o) const { return x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const TrianglePoint& o) const { return !(*this == o); }

    std::string str() const;

private:
    TrianglePoint(FieldElement x, FieldElement y) : x_(std::move(x)), y_(std::move(y)) {}
    FieldElement x_, y_;
};

bool in_triangle(const FieldElement& x, const FieldElement& y);

/// F0 and F1 of a spec: F_i = P(sigma) A_i P(tau_i).
std::pair<MatrixZ, MatrixZ> build_F(const TripMapSpec& spec);

/// Matrix of the digit-k branch: (B F0^-1 F1^-k B^-1)^T, acting on row
/// vectors (1, x, y) from the left.
MatrixZ digit_matrix(const TripMapSpec& spec, long k);

/// (1, x, y) . M as a homogeneous triple (z', x', y').
std::array<FieldElement, 3> homogeneous_image(const MatrixZ& M, const TrianglePoint& p);

/// (x'/z', y'/z'); throws ProjectionPole when z' = 0. No membership check.
std::pair<FieldElement, FieldElement> project_pair(const std::array<FieldElement, 3>& t);

/// Whether a homogeneous triple qualifies as a digit image: z' >= x' >= y' > 0.
bool triple_in_cone(const std::array<FieldElement, 3>& t);

/// Smallest k in [0, maxDigit] whose branch image satisfies z' >= x' >= y' > 0.
/// Throws DegenerateOrbit when no k qualifies but some k lands on y' = 0
/// (orbit hit the triangle boundary), NoDigit otherwise.
long digit_of(const TripMapSpec& spec, const TrianglePoint& p, long maxDigit = 10000);

/// Image of p under the digit-k branch (validates the image lies in the
/// closed triangle).
TrianglePoint apply_digit(const TripMapSpec& spec, long k, const TrianglePoint& p);

struct StepResult {
    long digit;
    TrianglePoint point;
};

/// One full map step: find the digit, then apply that branch.
StepResult apply_map(const TripMapSpec& spec, const TrianglePoint& p, long maxDigit = 10000);

enum class OrbitStop { Completed, Degenerate, NoDigit };

std::string orbit_stop_name(OrbitStop s);

struct OrbitResult {
    std::vector<long> digits;
    std::vector<TrianglePoint> points; // orbit including the start point
    OrbitStop stop = OrbitStop::Completed;
    std::string note; // detail when the orbit stops early
};

/// Up to `count` digits of p's orbit under the map.
OrbitResult trip_sequence(const TripMapSpec& spec, const TrianglePoint& p, int count,
                          long maxDigit = 10000);

// ---------------------------------------------------------------------------
// Named maps with published closed forms.

enum class NamedMap { E132132, Meee, Me23e, M1312e, M2323e };

const std::vector<NamedMap>& all_named_maps();
TripMapSpec named_spec(NamedMap m);
std::string named_map_label(NamedMap m);

/// The closed-form branch expression of a named map at digit k, evaluated
/// verbatim (pole-checked only; the value may leave the triangle when k is
/// not the point's digit). For E132132 only k = 1 has a published form
/// (ParameterRange otherwise). For M1312e with k >= 1 the published
/// expression equals the (k+1)-fold iterate of the digit-0 branch rather
/// than the digit-k branch.
std::pair<FieldElement, FieldElement> closed_form_pair(NamedMap m, long k,
                                                       const TrianglePoint& p);

/// closed_form_pair wrapped as a TrianglePoint (throws when the value lies
/// outside the closed triangle).
TrianglePoint closed_form_apply(NamedMap m, long k, const TrianglePoint& p);

// ---------------------------------------------------------------------------
// Partition geometry.

struct PartitionCell {
    std::vector<long> word; // digits a_0 .. a_{d-1}
    MatrixZ matrix;         // B * prod_j (F1^{a_j} F0)
    std::array<std::pair<Rational, Rational>, 3> vertices; // projectivized columns
};

/// Cells of the depth-`depth` cylinder partition with digits in
/// [0, perLevelMax]; columns (z, x, y) of each cell matrix give the vertices.
std::vector<PartitionCell> partition_cells(const TripMapSpec& spec, int depth, long perLevelMax);

/// Exact point-in-triangle tests against a cell's vertex triangle.
/// `cell_contains` includes the boundary; the strict variant requires the
/// point to lie in the open interior (false for degenerate cells).
bool cell_contains(const PartitionCell& cell, const Rational& x, const Rational& y);
bool cell_contains_strict(const PartitionCell& cell, const Rational& x, const Rational& y);

} // namespace tripcf
