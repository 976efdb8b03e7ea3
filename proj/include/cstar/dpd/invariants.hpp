#pragma once

#include <string>
#include <vector>

#include "cstar/dpd/presentation.hpp"
#include "cstar/exactmath/int_matrix.hpp"
#include "cstar/exactmath/smith.hpp"

namespace cstar {

inline constexpr int kDefaultDegreeCap = 32;

// ---------------------------------------------------------------------------
// Graded pieces

/// The degree-i piece. When over_base is set it is the free A0-module
/// A0 * generators[0] * u^i; otherwise generators is a C-basis (elliptic case).
struct GradedComponent {
    int degree = 0;
    bool over_base = true;
    std::vector<FactoredRational> generators;
};

namespace detail {

/// prod (t - p)^(-E(p)) over finite points of an integral divisor E.
inline FactoredRational section_generator(const QDivisor& integral) {
    std::vector<RootFactor> factors;
    for (const auto& [pt, c] : integral.entries())
        if (!pt.infinite)
            factors.push_back({pt.value, -static_cast<int>(to_long(c.get_num()))});
    return FactoredRational(1, std::move(factors));
}

/// The divisor whose floor defines A_i: i*D (one-sided) or |i|*D- (hyperbolic, i < 0).
inline QDivisor scaled_divisor(const DpdPresentation& p, int i) {
    if (p.is_hyperbolic())
        return i >= 0 ? Rational(i) * p.pair().dplus : Rational(-i) * p.pair().dminus;
    return Rational(i) * p.divisor();
}

}  // namespace detail

inline GradedComponent graded_component(const DpdPresentation& p, int i) {
    if (!p.is_hyperbolic() && i < 0)
        throw PreconditionError("negative degree in a one-sided grading");
    const bool projective = p.curve() == CurveKind::ProjectiveLine;
    if (projective != (p.grading() == GradingCase::Elliptic))
        throw UnsupportedError(std::string("graded pieces of a ") + to_string(p.grading()) +
                               " presentation on the " + to_string(p.curve()));
    QDivisor floor_i = floor_div(detail::scaled_divisor(p, i));
    GradedComponent out{i, !projective, {}};
    if (!projective) {
        out.generators.push_back(detail::section_generator(floor_i));
        return out;
    }
    // H^0(P^1, O(E)) = { h * g : deg h <= deg E } with g the finite-part generator.
    Rational deg = floor_i.degree();
    if (deg < 0)
        return out;
    FactoredRational g = detail::section_generator(floor_i);
    long n = to_long(deg.get_num());
    for (long k = 0; k <= n; ++k)
        out.generators.push_back(g * FactoredRational::linear(0, static_cast<int>(k)));
    return out;
}

/// All pieces with |i| <= cap (i >= 0 for one-sided gradings).
inline std::vector<GradedComponent> graded_components(const DpdPresentation& p,
                                                      int cap = kDefaultDegreeCap) {
    std::vector<GradedComponent> out;
    for (int i = p.is_hyperbolic() ? -cap : 0; i <= cap; ++i)
        out.push_back(graded_component(p, i));
    return out;
}

/// Whether f * u^i lies in A_i, i.e. div f + floor(i D) >= 0 on the curve.
inline bool in_component(const DpdPresentation& p, int i, const FactoredRational& f) {
    if (!p.is_hyperbolic() && i < 0)
        return false;
    QDivisor test = divisor_of(f, p.curve()) + floor_div(detail::scaled_divisor(p, i));
    for (const auto& [pt, c] : test.entries())
        if (c < 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Hyperbolic invariants on the affine line

enum class MlClass { Trivial, LinePoly, Full };

inline const char* to_string(MlClass m) {
    switch (m) {
        case MlClass::Trivial: return "trivial";
        case MlClass::LinePoly: return "line_poly";
        case MlClass::Full: return "full";
    }
    return "?";
}

namespace detail {

inline void require_hyperbolic_affine(const DpdPresentation& p, const char* what) {
    if (!p.is_hyperbolic())
        throw PreconditionError(std::string(what) + " requires a hyperbolic presentation");
    if (p.curve() != CurveKind::AffineLine)
        throw PreconditionError(std::string(what) + " requires A0 = C[t] (affine line)");
}

}  // namespace detail

/// Makar-Limanov class from the supports of the fractional parts {D+}, {D-}.
inline MlClass ml_class(const DpdPresentation& p) {
    detail::require_hyperbolic_affine(p, "ml_class");
    QDivisor s = p.pair().sum();
    if (!s.is_nonpositive())
        throw PreconditionError("ml_class requires D_+ + D_- <= 0");
    if (s.is_zero())
        throw PreconditionError("ml_class requires D_+ + D_- != 0");
    bool plus_concentrated = fractional_part(p.pair().dplus).entries().size() <= 1;
    bool minus_concentrated = fractional_part(p.pair().dminus).entries().size() <= 1;
    if (plus_concentrated && minus_concentrated)
        return MlClass::Trivial;
    if (plus_concentrated || minus_concentrated)
        return MlClass::LinePoly;
    return MlClass::Full;
}

/// D+(p) = -e+/m+ with m+ > 0 and D-(p) = e-/m- with m- < 0, both in lowest terms.
struct NegPointData {
    Rational point;
    Integer e_plus, m_plus;
    Integer e_minus, m_minus;

    /// | e+ m+ ; e- m- | = e+ m- - e- m+.
    Integer determinant() const { return e_plus * m_minus - e_minus * m_plus; }
};

inline NegPointData encode_point(const Rational& point, const Rational& plus, const Rational& minus) {
    return NegPointData{point, -plus.get_num(), plus.get_den(), -minus.get_num(),
                        -minus.get_den()};
}

/// Points with (D+ + D-)(p) < 0 in ascending order; l is the list length.
inline std::vector<NegPointData> negative_points(const DpdPresentation& p) {
    detail::require_hyperbolic_affine(p, "negative_points");
    const auto& pr = p.pair();
    std::vector<NegPointData> out;
    const QDivisor sum = pr.sum();
    for (const auto& [pt, c] : sum.entries())
        if (c < 0)
            out.push_back(encode_point(pt.value, pr.dplus[pt], pr.dminus[pt]));
    return out;
}

struct MultipleFiber {
    Rational point;
    Integer multiplicity;
};

/// Points with (D+ + D-)(p) = 0 and D+(p) not integral; multiplicity is the denominator.
inline std::vector<MultipleFiber> multiple_fibers(const DpdPresentation& p) {
    detail::require_hyperbolic_affine(p, "multiple_fibers");
    const auto& pr = p.pair();
    std::vector<MultipleFiber> out;
    for (const auto& [pt, c] : pr.dplus.entries())
        if (!is_integral(c) && pr.dminus[pt] == -c)
            out.push_back({pt.value, c.get_den()});
    return out;
}

/// Every negative point has determinant -1. Multiple-fiber points impose no condition.
inline bool is_smooth(const DpdPresentation& p) {
    for (const auto& np : negative_points(p))
        if (np.determinant() != -1)
            return false;
    return true;
}

/// Generators O1+, O1-, O2+, ... over the negative points in ascending order.
inline std::vector<std::string> orbit_labels(std::size_t l) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= l; ++i) {
        labels.push_back("O" + std::to_string(i) + "+");
        labels.push_back("O" + std::to_string(i) + "-");
    }
    return labels;
}

/// Relations M_i = m_i+ [O_i+] - m_i- [O_i-] for each i, and sum_i E_i with
/// E_i = e_i+ [O_i+] - e_i- [O_i-].
inline std::vector<std::vector<Integer>> class_group_relations(const std::vector<NegPointData>& pts) {
    const std::size_t n = 2 * pts.size();
    std::vector<std::vector<Integer>> rels;
    std::vector<Integer> e_sum(n);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Integer> m(n);
        m[2 * i] = pts[i].m_plus;
        m[2 * i + 1] = -pts[i].m_minus;
        rels.push_back(std::move(m));
        e_sum[2 * i] = pts[i].e_plus;
        e_sum[2 * i + 1] = -pts[i].e_minus;
    }
    if (!pts.empty())
        rels.push_back(std::move(e_sum));
    return rels;
}

inline void require_no_multiple_fibers(const DpdPresentation& p, const char* what) {
    if (!multiple_fibers(p).empty())
        throw UnsupportedError(std::string(what) + " is not available when multiple fibers are present");
}

inline AbelianGroup class_group(const DpdPresentation& p) {
    require_no_multiple_fibers(p, "class_group");
    auto pts = negative_points(p);
    return abelian_group_from_relations(orbit_labels(pts.size()), class_group_relations(pts));
}

struct CanonicalClass {
    std::vector<Integer> vector;  // coordinates on O1+, O1-, ...
    bool trivial = false;
    bool extrapolated = false;  // the per-point formula is only established for l = 2
};

/// K = sum_i (m_i+ - 1)[O_i+] + (-m_i- - 1)[O_i-].
inline std::vector<Integer> canonical_vector(const std::vector<NegPointData>& pts) {
    std::vector<Integer> k;
    for (const auto& np : pts) {
        k.push_back(np.m_plus - 1);
        k.push_back(-np.m_minus - 1);
    }
    return k;
}

inline CanonicalClass canonical_class(const DpdPresentation& p) {
    AbelianGroup group = class_group(p);
    auto pts = negative_points(p);
    CanonicalClass out;
    out.vector = canonical_vector(pts);
    out.trivial = group.is_zero(out.vector);
    out.extrapolated = pts.size() != 2;
    return out;
}

/// m1+ + m1- = m2+ + m2- for exactly two negative points.
inline bool multiplicity_sums_agree(const std::vector<NegPointData>& pts) {
    if (pts.size() != 2)
        throw PreconditionError("the multiplicity-sum test compares exactly two negative points");
    return pts[0].m_plus + pts[0].m_minus == pts[1].m_plus + pts[1].m_minus;
}

/// det(K, M1, M2, E1 + E2) for two negative points.
inline Integer canonical_determinant(const std::vector<NegPointData>& pts) {
    if (pts.size() != 2)
        throw PreconditionError("canonical determinant needs exactly two negative points");
    auto rels = class_group_relations(pts);
    std::vector<std::vector<Integer>> rows{canonical_vector(pts)};
    rows.insert(rows.end(), rels.begin(), rels.end());
    return IntMatrix::from_rows(rows).determinant();
}

}  // namespace cstar
