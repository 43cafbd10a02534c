#pragma once

#include "tripcf/tripmap.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tripcf {

/// One of the three combo map classes: apply a repeat map n times, then a
/// closing map once.
///   class 1: repeat T_{e,(132),(132)}, close T_{e,e,e}
///   class 2: repeat T_{e,(132),(132)}, close T_{e,(23),e}
///   class 3: repeat T_{(13),(12),e},   close T_{(23),(23),e}
struct ComboSpec {
    int classId = 1;
    long n = 0;

    /// Parses "class:<1|2|3>,n:<int>".
    static ComboSpec parse(std::string_view text);
    std::string str() const;
    bool operator==(const ComboSpec& o) const { return classId == o.classId && n == o.n; }
};

TripMapSpec combo_repeat_spec(int classId);
TripMapSpec combo_close_spec(int classId);

/// Digits of one combo application: n digits of the repeat map, then the
/// closing digit.
struct DigitTuple {
    std::vector<long> ms;
    long k = 0;

    bool operator==(const DigitTuple& o) const { return ms == o.ms && k == o.k; }
    std::string str() const;
    std::vector<long> flattened() const;
};

struct ComboStep {
    TrianglePoint point;
    DigitTuple tuple;
};

ComboStep combo_apply(const ComboSpec& spec, const TrianglePoint& p, long maxK = 10000);

struct ComboSequence {
    std::vector<DigitTuple> tuples;
    std::vector<TrianglePoint> points; // including the start point
    OrbitStop stop = OrbitStop::Completed;
    std::string note;
};

ComboSequence combo_sequence(const ComboSpec& spec, const TrianglePoint& p, int length,
                             long maxK = 10000);

enum class PeriodicityStatus { ProvenByRevisit, UnknownCapReached, Degenerate };

std::string periodicity_status_name(PeriodicityStatus s);

struct PeriodicityReport {
    PeriodicityStatus status = PeriodicityStatus::UnknownCapReached;
    long preperiod = 0;            // meaningful when proven
    long period = 0;               // meaningful when proven
    std::vector<DigitTuple> tuples; // the repeating block when proven
    std::string note;
};

/// Exact cycle detection: iterates combo_apply, keying each state by the
/// coefficient triples of x and y (exact equality; a revisit is a proof).
PeriodicityReport detect_periodicity(const ComboSpec& spec, const TrianglePoint& p,
                                     int capIterations = 1000, long maxK = 10000);

// ---------------------------------------------------------------------------
// Theorem machinery

/// Class polynomials: 1 -> x^3+Ax^2+Bx-1 (A>=0, B>=1);
/// 2 -> x^3-Ax^2-Bx+1 (A,B>=1); 3 -> x^3-Ax^2+Bx-1 (B>A>=1).
PolyQ theorem_polynomial(int classId, long A, long B);

/// Displayed product matrix, cross-checked against its digit-matrix factors.
MatrixZ theorem_matrix(int classId, long A, long B);

/// The digit-matrix factorization behind theorem_matrix, in application order.
std::vector<std::pair<TripMapSpec, long>> theorem_factors(int classId, long A, long B);

/// Combo spec predicted by the theorems: class 1 -> n=B-1, class 2 -> n=B-1,
/// class 3 -> n=A.
ComboSpec theorem_combo(int classId, long A, long B);

/// The free-running digit tuple the factorization predicts.
DigitTuple expected_theorem_tuple(int classId, long A, long B);

/// The designated point: (u,u^2) for classes 1-2, (u, u-u^2) for class 3,
/// u the unique (0,1) root of the class polynomial. Throws Reducible when
/// the polynomial factors.
TrianglePoint theorem_point(int classId, long A, long B);

struct EigenCheck {
    bool isEigen = false;
    FieldElement eigenvalue;
};

/// Row-vector eigencheck: w = (1,e1,e2) . M; passes iff w = w0 * (1,e1,e2).
EigenCheck left_eigencheck(const MatrixZ& M, const FieldElement& e1, const FieldElement& e2);

/// Polynomial form of the eigencheck in Q[x]/(p), valid even when p is
/// reducible: with b = (1, x, q) and q = x^2 (classes 1,2) or x-x^2 (class 3),
/// checks (b . M)_j == x * b_j (mod p) for all j.
bool theorem_eigen_identity(int classId, long A, long B);

/// Applies prescribed (spec, digit) steps in order, ignoring digit_of.
TrianglePoint forced_apply(const std::vector<std::pair<TripMapSpec, long>>& steps,
                           const TrianglePoint& p);

} // namespace tripcf
