#pragma once

#include "tripcf/combo.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tripcf {

/// Shape test for unit cubics: monic integer cubic with constant term +-1.
struct UnitShape {
    bool isUnitShape = false;
    int signOfConstant = 0; // +1 / -1 when isUnitShape, 0 otherwise
};

UnitShape unit_constant_check(const PolyQ& p);

/// Annihilating cubic of v = u^2 for the squaring cases. Inputs by case:
///   3: x^3+Ax^2-Bx+1 -> x^3-(A^2+2B)x^2+(B^2-2A)x-1   (A,B >= 1)
///   4: x^3+Ax^2-Bx-1 -> x^3-(A^2+2B)x^2+(B^2+2A)x-1   (A,B >= 1)
///   5: x^3-Ax^2+Bx+1 -> x^3+(2B-A^2)x^2+(B^2+2A)x-1   (A,B >= 1)
///   9: x^3+Ax^2-1    -> x^3-A^2x^2+2Ax-1              (A >= 1, B = 0)
///  10: x^3-Ax^2+1    -> x^3-A^2x^2+2Ax-1              (A >= 1, B = 0)
///  15: x^3-Bx+1      -> x^3-2Bx^2+B^2x-1              (A = 0, B >= 1)
PolyQ square_transform(int caseId, const Integer& A, const Integer& B);

/// x^3-Ax^2+Bx-1 -> x^3-Bx^2+Ax-1, the monic polynomial whose roots are the
/// reciprocals of p's roots. Requires a monic integer cubic with constant
/// term -1; an involution.
PolyQ reciprocal_transform(const PolyQ& p);

enum class ElementMap { Identity, Square, ReciprocalProduct };

std::string element_map_name(ElementMap m);

struct TransformStep {
    int caseId = 0;
    PolyQ input;
    PolyQ output;
    ElementMap map = ElementMap::Identity;

    bool operator==(const TransformStep& o) const {
        return caseId == o.caseId && input == o.input && output == o.output && map == o.map;
    }
};

struct TransformChain {
    std::vector<TransformStep> steps;
};

/// One of the canonical unit equations:
///   form 1: x^3+Px^2+Qx-1 (P >= 0, Q >= 1; the pure x^3+Qx-1 shape is
///           stored as form 1 with P = 0)
///   form 2: x^3-Px^2-Qx+1 (P, Q >= 1)
///   form 4: x^3-Px^2+Qx-1 (Q > P >= 1)
struct CanonicalForm {
    int formId = 1;
    Integer P;
    Integer Q;

    PolyQ equation() const;
    std::string str() const;
    bool operator==(const CanonicalForm& o) const {
        return formId == o.formId && P == o.P && Q == o.Q;
    }
};

struct CanonicalResult {
    FieldPtr field; // field of v, presenting exactly form.equation()
    FieldElement v;
    CanonicalForm form;
    TransformChain chain;
};

/// Sign-pattern case analysis mapping each (0,1) root u of p to an element v
/// satisfying a canonical equation. One result per root in (0,1).
std::vector<CanonicalResult> canonicalize_unit(const PolyQ& p);

/// Periodic pair and combo map predicted for a canonical form:
///   form 1 -> ((v, v^2), class 1, n = Q-1)
///   form 2 -> ((v, v^2), class 2, n = Q-1)
///   form 4 -> ((v, v-v^2), class 3, n = P)
/// Requires v in (0,1) and an exact root of form.equation().
std::pair<TrianglePoint, ComboSpec> pair_for_form(const CanonicalForm& form,
                                                  const FieldElement& v);

struct PipelineCaps {
    int capIterations = 1000;
    long maxK = 10000;
};

struct PipelineResult {
    FieldPtr field;
    FieldElement v;
    CanonicalForm form;
    TrianglePoint pair;
    ComboSpec combo;
    PeriodicityReport periodicity;
    TransformChain chain;
    Rational discriminantNote; // discriminant of the input polynomial
};

/// Full composition: canonicalize, build the pair and combo spec, detect
/// periodicity, and verify the pair against the matching theorem matrix by a
/// left eigencheck. Failures rethrow as PipelineError naming the stage.
std::vector<PipelineResult> unit_pipeline(const PolyQ& p, const PipelineCaps& caps = {});

} // namespace tripcf
