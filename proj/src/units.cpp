#include "tripcf/units.hpp"

#include "tripcf/errors.hpp"

#include <utility>

namespace tripcf {

namespace {

long to_long(const Integer& z, const std::string& what) {
    if (!z.fits_slong_p())
        throw ParameterRange(what + " = " + to_string(z) + " does not fit a machine integer");
    return z.get_si();
}

/// Monic polynomial with the reciprocals of p's roots (constant term +-1).
PolyQ reciprocal_of_unit(const PolyQ& p) {
    const Rational& a = p.coeff(2);
    const Rational& b = p.coeff(1);
    const Rational& c = p.coeff(0);
    return PolyQ::monic_cubic(b * c, a * c, c);
}

/// Proof-order case id of the coefficient sign pattern of x^3+ax^2+bx+c.
int classify_case(int sa, int sb, int sc) {
    if (sa != 0 && sb != 0)
        return 1 + (sa < 0 ? 4 : 0) + (sb < 0 ? 2 : 0) + (sc < 0 ? 1 : 0);
    if (sb == 0 && sa != 0) {
        if (sa > 0) return sc < 0 ? 9 : 11;
        return sc > 0 ? 10 : 12;
    }
    if (sa == 0 && sb != 0) {
        if (sb > 0) return sc > 0 ? 13 : 14;
        return sc > 0 ? 15 : 16;
    }
    return sc > 0 ? 17 : 18;
}

/// Field presenting v = u^2: squares u's isolating interval and refines until
/// the squared interval isolates a single root of the annihilating cubic.
FieldPtr squared_root_field(const FieldPtr& uField, const PolyQ& out) {
    IsolatingInterval iv = uField->interval();
    while (sign(iv.lo) < 0) {
        uField->refine_once();
        iv = uField->interval();
    }
    while (sturm_count(out, iv.lo * iv.lo, iv.hi * iv.hi) != 1) {
        uField->refine_once();
        iv = uField->interval();
    }
    return CubicField::make(out, IsolatingInterval{iv.lo * iv.lo, iv.hi * iv.hi});
}

struct CaseOutcome {
    FieldPtr field;
    FieldElement v;
    CanonicalForm form;
};

/// Case-6 handler on g = x^3-Px^2+Qx-1 (w = the designated (0,1) root of g):
/// emits form 4 directly when Q > P, re-roots in the reciprocal polynomial
/// when P > Q. P = Q cannot happen for irreducible g.
CaseOutcome case6_handler(const PolyQ& g, const FieldPtr& wField, TransformChain& chain) {
    Integer P = -g.coeff(2).get_num();
    Integer Q = g.coeff(1).get_num();
    if (P < 1 || Q < 1)
        throw CanonicalizationError("case-6 handler needs x^3-Px^2+Qx-1 with P,Q >= 1; got " +
                                    g.str());
    if (P == Q)
        throw CanonicalizationError("case-6 handler received " + g.str() +
                                    " with P = Q, which has the root 1 and contradicts "
                                    "irreducibility");
    if (Q > P) {
        chain.steps.push_back({6, g, g, ElementMap::Identity});
        return {wField, FieldElement::generator(wField), CanonicalForm{4, P, Q}};
    }
    PolyQ h = reciprocal_transform(g);
    std::vector<FieldPtr> fields = fields_in_unit_interval(h);
    if (fields.size() != 1)
        throw CanonicalizationError("reciprocal polynomial " + h.str() + " of " + g.str() +
                                    " has " + std::to_string(fields.size()) +
                                    " roots in (0,1); expected exactly 1");
    chain.steps.push_back({6, g, h, ElementMap::ReciprocalProduct});
    return {fields.front(), FieldElement::generator(fields.front()), CanonicalForm{4, Q, P}};
}

CaseOutcome run_case(const PolyQ& p, int caseId, const Integer& A, const Integer& B,
                     const FieldPtr& uField, TransformChain& chain) {
    switch (caseId) {
        case 2:
            chain.steps.push_back({2, p, p, ElementMap::Identity});
            return {uField, FieldElement::generator(uField), CanonicalForm{1, A, B}};
        case 7:
            chain.steps.push_back({7, p, p, ElementMap::Identity});
            return {uField, FieldElement::generator(uField), CanonicalForm{2, A, B}};
        case 14:
            chain.steps.push_back({14, p, p, ElementMap::Identity});
            return {uField, FieldElement::generator(uField), CanonicalForm{1, 0, B}};
        case 6:
            return case6_handler(p, uField, chain);
        case 3:
        case 4:
        case 9:
        case 10:
        case 15: {
            PolyQ out = square_transform(caseId, A, B);
            FieldPtr vField = squared_root_field(uField, out);
            chain.steps.push_back({caseId, p, out, ElementMap::Square});
            return case6_handler(out, vField, chain);
        }
        case 5: {
            PolyQ out = square_transform(5, A, B);
            FieldPtr vField = squared_root_field(uField, out);
            chain.steps.push_back({5, p, out, ElementMap::Square});
            if (sign(out.coeff(2)) >= 0) {
                // 2B - A^2 >= 0: already of form 1.
                return {vField, FieldElement::generator(vField),
                        CanonicalForm{1, out.coeff(2).get_num(), out.coeff(1).get_num()}};
            }
            return case6_handler(out, vField, chain);
        }
        default:
            throw CanonicalizationError("sign-pattern case " + std::to_string(caseId) + " of " +
                                        p.str() + " cannot have a root in (0,1)");
    }
}

} // namespace

UnitShape unit_constant_check(const PolyQ& p) {
    UnitShape shape;
    if (p.degree() != 3 || !p.is_monic() || !p.has_integer_coeffs()) return shape;
    const Rational& c = p.coeff(0);
    if (c != Rational(1) && c != Rational(-1)) return shape;
    shape.isUnitShape = true;
    shape.signOfConstant = sign(c);
    return shape;
}

PolyQ square_transform(int caseId, const Integer& A, const Integer& B) {
    auto check = [&](bool needA, bool needB) {
        if (needA && A < 1)
            throw ParameterRange("square_transform case " + std::to_string(caseId) +
                                 " needs A >= 1; got A = " + to_string(A));
        if (!needA && A != 0)
            throw ParameterRange("square_transform case " + std::to_string(caseId) +
                                 " needs A = 0; got A = " + to_string(A));
        if (needB && B < 1)
            throw ParameterRange("square_transform case " + std::to_string(caseId) +
                                 " needs B >= 1; got B = " + to_string(B));
        if (!needB && B != 0)
            throw ParameterRange("square_transform case " + std::to_string(caseId) +
                                 " needs B = 0; got B = " + to_string(B));
    };
    switch (caseId) {
        case 3:
            check(true, true);
            return PolyQ::monic_cubic(Rational(Integer(-(A * A + 2 * B))),
                                      Rational(Integer(B * B - 2 * A)), Rational(-1));
        case 4:
            check(true, true);
            return PolyQ::monic_cubic(Rational(Integer(-(A * A + 2 * B))),
                                      Rational(Integer(B * B + 2 * A)), Rational(-1));
        case 5:
            check(true, true);
            return PolyQ::monic_cubic(Rational(Integer(2 * B - A * A)),
                                      Rational(Integer(B * B + 2 * A)), Rational(-1));
        case 9:
        case 10:
            check(true, false);
            return PolyQ::monic_cubic(Rational(Integer(-(A * A))), Rational(Integer(2 * A)),
                                      Rational(-1));
        case 15:
            check(false, true);
            return PolyQ::monic_cubic(Rational(Integer(-2 * B)), Rational(Integer(B * B)),
                                      Rational(-1));
        default:
            throw ParameterRange("square_transform handles cases 3, 4, 5, 9, 10, 15; got case " +
                                 std::to_string(caseId));
    }
}

PolyQ reciprocal_transform(const PolyQ& p) {
    if (p.degree() != 3 || !p.is_monic() || !p.has_integer_coeffs() || p.coeff(0) != Rational(-1))
        throw NotUnitShape("reciprocal_transform needs a monic integer cubic with constant "
                           "term -1; got " +
                           p.str());
    return reciprocal_of_unit(p);
}

std::string element_map_name(ElementMap m) {
    switch (m) {
        case ElementMap::Identity: return "identity";
        case ElementMap::Square: return "square";
        case ElementMap::ReciprocalProduct: return "reciprocal-product";
    }
    return "?";
}

PolyQ CanonicalForm::equation() const {
    switch (formId) {
        case 1: return PolyQ::monic_cubic(Rational(P), Rational(Q), Rational(-1));
        case 2: return PolyQ::monic_cubic(Rational(-P), Rational(-Q), Rational(1));
        case 4: return PolyQ::monic_cubic(Rational(-P), Rational(Q), Rational(-1));
        default: throw ParameterRange("canonical form id must be 1, 2, or 4");
    }
}

std::string CanonicalForm::str() const {
    return "form " + std::to_string(formId) + " (P=" + to_string(P) + ", Q=" + to_string(Q) +
           "): " + equation().str();
}

std::vector<CanonicalResult> canonicalize_unit(const PolyQ& p) {
    UnitShape shape = unit_constant_check(p);
    if (!shape.isUnitShape)
        throw NotUnitShape("expected a monic integer cubic with constant term +1 or -1; got " +
                           p.str());
    if (!is_irreducible_cubic(p)) throw Reducible(p.str() + " factors over Q");
    std::vector<FieldPtr> roots = fields_in_unit_interval(p);
    if (roots.empty()) {
        PolyQ rec = reciprocal_of_unit(p);
        std::string hint;
        if (!fields_in_unit_interval(rec).empty())
            hint = "; its reciprocal polynomial " + rec.str() +
                   " has one there (pass it instead)";
        throw NoRootInUnitInterval(p.str() + " has no root in (0,1)" + hint);
    }

    const Rational& a = p.coeff(2);
    const Rational& b = p.coeff(1);
    const int caseId = classify_case(sign(a), sign(b), sign(p.coeff(0)));
    const Integer A = abs(a.get_num());
    const Integer B = abs(b.get_num());

    std::vector<CanonicalResult> results;
    results.reserve(roots.size());
    for (const FieldPtr& uField : roots) {
        TransformChain chain;
        CaseOutcome out = run_case(p, caseId, A, B, uField, chain);
        if (chain.steps.size() > 3)
            throw CanonicalizationError("transform chain for " + p.str() + " exceeded 3 steps");
        if (out.form.equation() != out.field->min_poly())
            throw CanonicalizationError("canonical form " + out.form.str() +
                                        " does not present the field of " + p.str());
        results.push_back({std::move(out.field), std::move(out.v), std::move(out.form),
                           std::move(chain)});
    }
    return results;
}

std::pair<TrianglePoint, ComboSpec> pair_for_form(const CanonicalForm& form,
                                                  const FieldElement& v) {
    if (form.formId != 1 && form.formId != 2 && form.formId != 4)
        throw ParameterRange("canonical form id must be 1, 2, or 4; got " +
                             std::to_string(form.formId));
    if (sign_of(v) <= 0 || sign_of(v - FieldElement(1)) >= 0)
        throw ParameterRange("pair_for_form needs v in (0,1); got v = " + v.str());
    PolyQ eq = form.equation();
    FieldElement value;
    for (int i = eq.degree(); i >= 0; --i) value = value * v + FieldElement(eq.coeff(i));
    if (!value.is_zero())
        throw ParameterRange("v = " + v.str() + " is not a root of " + eq.str());

    FieldElement vsq = v * v;
    ComboSpec combo;
    if (form.formId == 4) {
        combo.classId = 3;
        combo.n = to_long(form.P, "combo repeat count");
        return {TrianglePoint::make(v, v - vsq), combo};
    }
    combo.classId = form.formId;
    combo.n = to_long(form.Q - 1, "combo repeat count");
    return {TrianglePoint::make(v, vsq), combo};
}

std::vector<PipelineResult> unit_pipeline(const PolyQ& p, const PipelineCaps& caps) {
    std::vector<CanonicalResult> canon;
    try {
        canon = canonicalize_unit(p);
    } catch (const Error& e) {
        throw PipelineError("canonicalize", e.what());
    }
    const Rational disc = discriminant(p);

    std::vector<PipelineResult> results;
    results.reserve(canon.size());
    for (CanonicalResult& c : canon) {
        auto pairAndCombo = [&] {
            try {
                return pair_for_form(c.form, c.v);
            } catch (const Error& e) {
                throw PipelineError("pair", e.what());
            }
        }();
        PeriodicityReport report = [&] {
            try {
                return detect_periodicity(pairAndCombo.second, pairAndCombo.first,
                                          caps.capIterations, caps.maxK);
            } catch (const Error& e) {
                throw PipelineError("periodicity", e.what());
            }
        }();
        try {
            const int classId = c.form.formId == 4 ? 3 : c.form.formId;
            MatrixZ M = theorem_matrix(classId, to_long(c.form.P, "theorem parameter A"),
                                       to_long(c.form.Q, "theorem parameter B"));
            EigenCheck check =
                left_eigencheck(M, pairAndCombo.first.x(), pairAndCombo.first.y());
            if (!check.isEigen || check.eigenvalue != c.v)
                throw Error("(1, x, y) is not a left eigenvector of " + M.str() +
                            " with eigenvalue v for " + c.form.str());
        } catch (const Error& e) {
            throw PipelineError("eigencheck", e.what());
        }
        results.push_back(PipelineResult{std::move(c.field), std::move(c.v), c.form,
                                         std::move(pairAndCombo.first), pairAndCombo.second,
                                         std::move(report), std::move(c.chain), disc});
    }
    return results;
}

} // namespace tripcf
