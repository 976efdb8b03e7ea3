#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cstar/divisor/qdivisor.hpp"

namespace cstar {

/// (D+, D-) on a common curve. The condition D+ + D- <= 0 is not enforced
/// here so that invalid input can be reported rather than rejected.
struct DivisorPair {
    QDivisor dplus;
    QDivisor dminus;

    DivisorPair(QDivisor plus, QDivisor minus) : dplus(std::move(plus)), dminus(std::move(minus)) {
        if (dplus.curve() != dminus.curve())
            throw PreconditionError("D+ and D- live on different curves");
    }

    CurveKind curve() const { return dplus.curve(); }
    QDivisor sum() const { return dplus + dminus; }
    bool sum_nonpositive() const { return sum().is_nonpositive(); }
    DivisorPair swapped() const { return {dminus, dplus}; }

    friend bool operator==(const DivisorPair& l, const DivisorPair& r) {
        return l.dplus == r.dplus && l.dminus == r.dminus;
    }
};

inline std::string to_string(const DivisorPair& p) {
    return "(" + to_string(p.dplus) + ", " + to_string(p.dminus) + ")";
}

/// (D+ + div f, D- - div f).
inline DivisorPair shift_pair(const DivisorPair& p, const FactoredRational& f) {
    QDivisor div = divisor_of(f, p.curve());
    return {p.dplus + div, p.dminus - div};
}

/// t -> a t + b with a != 0.
struct AffineMap {
    Rational a = 1;
    Rational b = 0;

    AffineMap() = default;
    AffineMap(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0)
            throw PreconditionError("affine map with a = 0");
    }

    Rational operator()(const Rational& t) const { return a * t + b; }
    Rational preimage(const Rational& q) const { return (q - b) / a; }
    AffineMap inverse() const { return {1 / a, -b / a}; }
    bool is_identity() const { return a == 1 && b == 0; }

    /// t -> outer(inner(t)).
    static AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
        return {outer.a * inner.a, outer.a * inner.b + outer.b};
    }

    friend bool operator==(const AffineMap& l, const AffineMap& r) { return l.a == r.a && l.b == r.b; }
};

/// (phi^* D)(p) = D(phi(p)).
inline QDivisor pullback(const QDivisor& d, const AffineMap& phi) {
    if (d.curve() == CurveKind::PuncturedLine && phi.b != 0)
        throw PreconditionError("translation is not an automorphism of the punctured line");
    QDivisor out(d.curve());
    for (const auto& [p, c] : d.entries())
        out.add(p.infinite ? p : Point::at(phi.preimage(p.value)), c);
    return out;
}

inline DivisorPair pullback(const DivisorPair& p, const AffineMap& phi) {
    return {pullback(p.dplus, phi), pullback(p.dminus, phi)};
}

/// f o phi, refactored so that div(f o phi) = phi^* div f.
inline FactoredRational pullback(const FactoredRational& f, const AffineMap& phi) {
    Rational scalar = f.scalar();
    std::vector<RootFactor> factors;
    for (const auto& [root, mult] : f.factors()) {
        scalar *= pow_of(phi.a, mult);
        factors.push_back({phi.preimage(root), mult});
    }
    return FactoredRational(scalar, std::move(factors));
}

/// Carries a source pair P' to P = shift(phi^* swap^s(P'), f).
struct EquivalenceWitness {
    AffineMap map;
    FactoredRational f;
    bool swapped = false;
};

inline DivisorPair apply_witness(const DivisorPair& source, const EquivalenceWitness& w) {
    return shift_pair(pullback(w.swapped ? source.swapped() : source, w.map), w.f);
}

/// Witness carrying P back to P' when w carries P' to P.
inline EquivalenceWitness inverse(const EquivalenceWitness& w) {
    AffineMap inv = w.map.inverse();
    FactoredRational g = pullback(w.f.inverse(), inv);
    return {inv, w.swapped ? g.inverse() : g, w.swapped};
}

/// Witness for applying inner first, then outer.
inline EquivalenceWitness compose(const EquivalenceWitness& outer, const EquivalenceWitness& inner) {
    // Swapping the outer pair turns shift by f into shift by 1/f.
    FactoredRational f2 = outer.swapped ? inner.f.inverse() : inner.f;
    return {AffineMap::compose(inner.map, outer.map), outer.f * pullback(f2, outer.map),
            outer.swapped != inner.swapped};
}

namespace detail {

struct PointKey {
    Rational sum;
    Rational frac_plus;
    friend bool operator==(const PointKey& l, const PointKey& r) {
        return l.sum == r.sum && l.frac_plus == r.frac_plus;
    }
};

/// Points where D+ + D- or {D+} is nonzero, with their automorphism-covariant labels.
inline std::vector<std::pair<Rational, PointKey>> distinguished_points(const DivisorPair& p) {
    QDivisor s = p.sum();
    QDivisor fp = fractional_part(p.dplus);
    std::map<Point, PointKey> keys;
    for (const auto& [pt, c] : s.entries())
        keys[pt].sum = c;
    for (const auto& [pt, c] : fp.entries())
        keys[pt].frac_plus = c;
    std::vector<std::pair<Rational, PointKey>> out;
    for (const auto& [pt, key] : keys)
        out.emplace_back(pt.value, key);
    return out;
}

/// Returns the shift witness when phi^* carries source to target up to linear equivalence.
inline std::optional<FactoredRational> linear_equivalence_under(const DivisorPair& target,
                                                                const DivisorPair& source,
                                                                const AffineMap& phi) {
    DivisorPair moved = pullback(source, phi);
    if (moved.sum() != target.sum())
        return std::nullopt;
    QDivisor diff = target.dplus - moved.dplus;
    if (!diff.is_integral())
        return std::nullopt;
    std::vector<RootFactor> factors;
    for (const auto& [pt, c] : diff.entries())
        factors.push_back({pt.value, static_cast<int>(to_long(c.get_num()))});
    return FactoredRational(1, std::move(factors));
}

inline std::optional<EquivalenceWitness> search_maps(const DivisorPair& target, const DivisorPair& source,
                                                     bool allow_curve_auto, bool swapped) {
    auto try_map = [&](const AffineMap& phi) -> std::optional<EquivalenceWitness> {
        if (auto f = linear_equivalence_under(target, source, phi))
            return EquivalenceWitness{phi, *f, swapped};
        return std::nullopt;
    };
    if (!allow_curve_auto)
        return try_map(AffineMap{});

    auto dp = distinguished_points(target);
    auto dq = distinguished_points(source);
    if (dp.size() != dq.size())
        return std::nullopt;
    if (dp.empty())
        return try_map(AffineMap{});

    const bool punctured = target.curve() == CurveKind::PuncturedLine;
    const auto& [p1, key1] = dp[0];
    if (dp.size() == 1 || punctured) {
        for (const auto& [q1, k] : dq) {
            if (!(k == key1))
                continue;
            AffineMap phi = punctured ? AffineMap(q1 / p1, 0) : AffineMap(1, q1 - p1);
            if (auto w = try_map(phi))
                return w;
        }
        return std::nullopt;
    }
    const auto& [p2, key2] = dp[1];
    for (const auto& [q1, k1] : dq) {
        if (!(k1 == key1))
            continue;
        for (const auto& [q2, k2] : dq) {
            if (q2 == q1 || !(k2 == key2))
                continue;
            Rational a = (q1 - q2) / (p1 - p2);
            AffineMap phi(a, q1 - a * p1);
            if (auto w = try_map(phi))
                return w;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Searches for a witness carrying `source` to `target`: an automorphism of the
/// line (when allowed), an optional interchange of D+ and D- (when allowed) and
/// a linear equivalence. Only the affine and punctured lines are supported.
inline std::optional<EquivalenceWitness> pairs_equivalent(const DivisorPair& target,
                                                          const DivisorPair& source, bool allow_swap,
                                                          bool allow_curve_auto) {
    if (target.curve() != source.curve())
        throw PreconditionError("pairs on different curves");
    if (target.curve() == CurveKind::ProjectiveLine)
        throw UnsupportedError("pair equivalence on the projective line");
    if (auto w = detail::search_maps(target, source, allow_curve_auto, false))
        return w;
    if (allow_swap)
        return detail::search_maps(target, source.swapped(), allow_curve_auto, true);
    return std::nullopt;
}

}  // namespace cstar
