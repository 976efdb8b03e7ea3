#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cstar/divisor/pair.hpp"
#include "cstar/dpd/invariants.hpp"
#include "cstar/dpd/presentation.hpp"
#include "cstar/toric/toric.hpp"

namespace cstar {

enum class Verdict { CStar2, A1xCStar, Vde, P1xP1MinusDiagonal, P2MinusQuadric, Other };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::CStar2: return "CStar2";
        case Verdict::A1xCStar: return "A1xCStar";
        case Verdict::Vde: return "Vde";
        case Verdict::P1xP1MinusDiagonal: return "P1xP1MinusDiagonal";
        case Verdict::P2MinusQuadric: return "P2MinusQuadric";
        case Verdict::Other: return "Other";
    }
    return "?";
}

/// Invariants that are only defined for some inputs are optional; the
/// matching *_note says why a value is missing.
struct SurfaceReport {
    GradingCase grading = GradingCase::Hyperbolic;
    CurveKind curve = CurveKind::AffineLine;
    std::optional<MlClass> ml;
    std::string ml_note;
    std::optional<std::size_t> l;
    std::vector<NegPointData> negative;
    std::vector<MultipleFiber> multiple_fibers;
    std::optional<bool> smooth;
    std::optional<AbelianGroup> class_group;
    std::string class_group_note;
    std::optional<CanonicalClass> canonical;
    std::string canonical_note;

    Verdict verdict = Verdict::Other;
    std::optional<ToricData> toric;
    std::optional<DpdPresentation> canonical_form;
    std::optional<EquivalenceWitness> witness;

    bool bundle_consistent = true;
    std::vector<std::string> bundle_violations;
};

/// The pair of the complement of the diagonal in P^1 x P^1.
inline DivisorPair p1xp1_pair() {
    return {QDivisor(CurveKind::AffineLine),
            QDivisor(CurveKind::AffineLine, {{Rational(1), Rational(-1)}, {Rational(-1), Rational(-1)}})};
}

/// The pair of the complement of a smooth conic in P^2.
inline DivisorPair p2_quadric_pair() {
    return {QDivisor(CurveKind::AffineLine, {{Rational(0), Rational(1, 2)}}),
            QDivisor(CurveKind::AffineLine, {{Rational(0), Rational(-1, 2)}, {Rational(1), Rational(-1)}})};
}

namespace detail {

inline FactoredRational clearing_function(const QDivisor& integral) { return section_generator(integral); }

inline void fill_affine_invariants(const DpdPresentation& p, SurfaceReport& r) {
    r.multiple_fibers = multiple_fibers(p);
    r.negative = negative_points(p);
    r.l = r.negative.size();
    r.smooth = is_smooth(p);
    if (p.pair().sum().is_zero())
        r.ml_note = "unavailable: D_+ + D_- = 0";
    else
        r.ml = ml_class(p);
    if (!r.multiple_fibers.empty()) {
        r.class_group_note = r.canonical_note = "unavailable: multiple fibers";
        return;
    }
    r.class_group = class_group(p);
    r.canonical = canonical_class(p);
}

inline void check(SurfaceReport& r, bool ok, const std::string& what) {
    if (!ok) {
        r.bundle_consistent = false;
        r.bundle_violations.push_back(what);
    }
}

inline bool group_is(const std::optional<AbelianGroup>& g, std::size_t free_rank, std::vector<Integer> torsion) {
    return g && g->free_rank == free_rank && g->torsion == torsion;
}

}  // namespace detail

/// Re-derives the invariants implied by the verdict from the input itself.
inline void verify_bundle(const DpdPresentation& p, SurfaceReport& r) {
    r.bundle_consistent = true;
    r.bundle_violations.clear();
    using detail::check;
    switch (r.verdict) {
        case Verdict::A1xCStar:
        case Verdict::CStar2: {
            bool unit = p.is_hyperbolic() ? p.pair().sum().is_zero() && p.pair().dplus.is_integral()
                                          : p.divisor().is_integral();
            check(r, unit, "unit of nonzero degree requires D_+ + D_- = 0 with integral D_+");
            // parabolic units only occur over C*; hyperbolic ones give C*^2 exactly over C*
            bool curve_ok = p.is_hyperbolic()
                                ? (r.verdict == Verdict::CStar2) == (p.curve() == CurveKind::PuncturedLine)
                                : r.verdict == Verdict::A1xCStar && p.curve() == CurveKind::PuncturedLine;
            check(r, curve_ok, "curve kind does not match verdict");
            break;
        }
        case Verdict::Vde: {
            auto pts = negative_points(p);
            check(r, pts.size() == 1, "toric surface needs exactly one negative point");
            check(r, multiple_fibers(p).empty(), "toric surface has no multiple fibers");
            check(r, ml_class(p) == MlClass::Trivial, "toric surface has trivial ML");
            if (r.toric) {
                check(r, is_smooth(p) == (r.toric->d == 1), "smooth iff d = 1");
                std::vector<Integer> torsion;
                if (r.toric->d > 1)
                    torsion.push_back(r.toric->d);
                check(r, detail::group_is(class_group(p), 0, torsion), "class group Z/d");
            }
            break;
        }
        case Verdict::P1xP1MinusDiagonal:
            check(r, is_smooth(p), "smooth");
            check(r, multiple_fibers(p).empty() && canonical_class(p).trivial, "canonical class trivial");
            check(r, multiple_fibers(p).empty() && detail::group_is(class_group(p), 1, {}), "class group Z");
            check(r, ml_class(p) == MlClass::Trivial, "ML trivial");
            break;
        case Verdict::P2MinusQuadric: {
            check(r, is_smooth(p), "smooth");
            check(r, ml_class(p) == MlClass::Trivial, "ML trivial");
            check(r, negative_points(p).size() == 1, "l = 1");
            auto mf = multiple_fibers(p);
            check(r, mf.size() == 1 && mf.front().multiplicity == 2, "one multiple fiber of multiplicity 2");
            break;
        }
        case Verdict::Other:
            break;
    }
}

inline bool bundle_consistent(const DpdPresentation& p, const SurfaceReport& r) {
    SurfaceReport copy = r;
    verify_bundle(p, copy);
    return copy.bundle_consistent;
}

inline SurfaceReport recognize(const DpdPresentation& p) {
    require_valid(p);
    SurfaceReport r;
    r.grading = p.grading();
    r.curve = p.curve();
    const bool hyperbolic_affine = p.is_hyperbolic() && p.curve() == CurveKind::AffineLine;
    if (hyperbolic_affine) {
        detail::fill_affine_invariants(p, r);
    } else {
        r.ml_note = r.class_group_note = r.canonical_note =
            std::string("unavailable: ") + to_string(p.grading()) + " on " + to_string(p.curve());
    }

    auto done = [&](Verdict v) {
        r.verdict = v;
        verify_bundle(p, r);
        return r;
    };

    if (p.is_hyperbolic()) {
        const DivisorPair& pr = p.pair();
        // (i) a homogeneous unit of nonzero degree
        if (pr.sum().is_zero() && pr.dplus.is_integral()) {
            FactoredRational f = detail::clearing_function(pr.dplus);
            r.witness = EquivalenceWitness{AffineMap{}, f, false};
            r.canonical_form = DpdPresentation::hyperbolic(QDivisor(p.curve()), QDivisor(p.curve()));
            return done(p.curve() == CurveKind::PuncturedLine ? Verdict::CStar2 : Verdict::A1xCStar);
        }
        if (hyperbolic_affine && !pr.sum().is_zero()) {
            // (ii) toric
            if (auto t = recognize_toric(p)) {
                r.toric = t->data;
                r.witness = t->witness;
                r.canonical_form = DpdPresentation::hyperbolic(t->normalized);
                return done(Verdict::Vde);
            }
            // (iii), (iv) the two homogeneous surfaces
            const std::pair<DivisorPair, Verdict> models[] = {
                {p1xp1_pair(), Verdict::P1xP1MinusDiagonal},
                {p2_quadric_pair(), Verdict::P2MinusQuadric},
            };
            for (const auto& [model, verdict] : models) {
                if (auto w = pairs_equivalent(model, pr, true, true)) {
                    r.witness = w;
                    r.canonical_form = DpdPresentation::hyperbolic(model);
                    return done(verdict);
                }
            }
        }
        return done(Verdict::Other);
    }

    // (v) parabolic over C* with D linearly equivalent to an integral divisor
    if (p.grading() == GradingCase::Parabolic && p.curve() == CurveKind::PuncturedLine &&
        p.divisor().is_integral()) {
        FactoredRational f = detail::clearing_function(p.divisor());
        r.witness = EquivalenceWitness{AffineMap{}, f, false};
        r.canonical_form = DpdPresentation::parabolic(QDivisor(CurveKind::PuncturedLine));
        return done(Verdict::A1xCStar);
    }
    return done(Verdict::Other);
}

// ---------------------------------------------------------------------------
// Uniqueness of presentations

struct UniquenessReport {
    enum class Mode { Equivalence, Toric };
    Mode mode = Mode::Equivalence;
    bool equivalent = false;
    std::optional<EquivalenceWitness> witness;  // carries the second pair to the first
    std::optional<ToricData> first_toric, second_toric;
    bool guarantee_applies = false;  // both ML classes non-trivial
    bool counterexample_candidate = false;
    std::vector<std::string> differing_invariants;
};

inline const char* to_string(UniquenessReport::Mode m) {
    return m == UniquenessReport::Mode::Toric ? "toric" : "equivalence";
}

namespace detail {

inline std::vector<std::string> invariant_differences(const SurfaceReport& a, const SurfaceReport& b) {
    std::vector<std::string> out;
    auto opt = [](const auto& o, auto fmt) { return o ? fmt(*o) : std::string("n/a"); };
    auto cmp = [&](const std::string& name, const std::string& x, const std::string& y) {
        if (x != y)
            out.push_back(name + ": " + x + " vs " + y);
    };
    cmp("l", opt(a.l, [](auto v) { return std::to_string(v); }), opt(b.l, [](auto v) { return std::to_string(v); }));
    cmp("ml", opt(a.ml, [](auto v) { return std::string(to_string(v)); }),
        opt(b.ml, [](auto v) { return std::string(to_string(v)); }));
    cmp("smooth", opt(a.smooth, [](bool v) { return std::string(v ? "true" : "false"); }),
        opt(b.smooth, [](bool v) { return std::string(v ? "true" : "false"); }));
    cmp("class group", opt(a.class_group, [](const auto& g) { return to_string(g); }),
        opt(b.class_group, [](const auto& g) { return to_string(g); }));
    auto fibers = [](const SurfaceReport& r) {
        std::vector<Integer> m;
        for (const auto& f : r.multiple_fibers)
            m.push_back(f.multiplicity);
        std::sort(m.begin(), m.end());
        std::string s;
        for (const auto& x : m)
            s += (s.empty() ? "" : ",") + to_string(x);
        return "[" + s + "]";
    };
    cmp("multiple fibers", fibers(a), fibers(b));
    return out;
}

}  // namespace detail

/// Decides whether two hyperbolic presentations are equivalent up to swap,
/// linear equivalence and an automorphism of the line, and compares the
/// invariants. Toric inputs are compared by their (d, e) data.
inline UniquenessReport uniqueness_check(const DpdPresentation& first, const DpdPresentation& second) {
    require_valid(first);
    require_valid(second);
    if (!first.is_hyperbolic() || !second.is_hyperbolic())
        throw PreconditionError("uniqueness_check compares hyperbolic presentations");
    if (first.curve() != second.curve())
        throw PreconditionError("uniqueness_check needs presentations over the same curve");
    SurfaceReport ra = recognize(first);
    SurfaceReport rb = recognize(second);

    UniquenessReport out;
    out.differing_invariants = detail::invariant_differences(ra, rb);
    if (ra.verdict == Verdict::Vde && rb.verdict == Verdict::Vde) {
        out.mode = UniquenessReport::Mode::Toric;
        out.first_toric = ra.toric;
        out.second_toric = rb.toric;
        out.equivalent = vde_isomorphic(*ra.toric, *rb.toric);
        return out;
    }
    out.witness = pairs_equivalent(first.pair(), second.pair(), true, true);
    out.equivalent = out.witness.has_value();
    out.guarantee_applies = ra.ml && rb.ml && *ra.ml != MlClass::Trivial && *rb.ml != MlClass::Trivial;
    out.counterexample_candidate = out.guarantee_applies && !out.equivalent && out.differing_invariants.empty();
    return out;
}

}  // namespace cstar
