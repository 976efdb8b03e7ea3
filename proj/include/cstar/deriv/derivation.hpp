#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cstar/exactmath/parse.hpp"
#include "cstar/exactmath/poly2.hpp"

namespace cstar {

/// A derivation of Q[x,y] or Q[t,u,u^-1], determined by the images of the
/// two generators. On the Laurent ring d(u^-1) = -u^-2 d(u) by Leibniz.
class PolyDerivation {
public:
    explicit PolyDerivation(RingKind kind = RingKind::Polynomial)
        : kind_(kind), images_{Poly2(kind), Poly2(kind)} {}

    PolyDerivation(Poly2 first, Poly2 second) : kind_(first.kind()), images_{std::move(first), std::move(second)} {
        if (images_[1].kind() != kind_)
            throw PreconditionError("derivation images from different rings");
    }

    /// c * g_index * d/dg_index; the weighted sum over generators is the grading derivation.
    static PolyDerivation euler(RingKind kind, const Rational& w0, const Rational& w1) {
        return {Poly2::monomial(kind, w0, 1, 0), Poly2::monomial(kind, w1, 0, 1)};
    }

    RingKind kind() const { return kind_; }
    const Poly2& image(int index) const { return images_[index]; }
    bool is_zero() const { return images_[0].is_zero() && images_[1].is_zero(); }

    /// d(f) = d(g0) df/dg0 + d(g1) df/dg1.
    Poly2 operator()(const Poly2& f) const {
        check_ring(f.kind());
        Poly2 out(kind_);
        if (!images_[0].is_zero())
            out += images_[0] * f.partial(0);
        if (!images_[1].is_zero())
            out += images_[1] * f.partial(1);
        return out;
    }

    PolyDerivation& operator+=(const PolyDerivation& o) {
        check_ring(o.kind_);
        images_[0] += o.images_[0];
        images_[1] += o.images_[1];
        return *this;
    }
    PolyDerivation& operator-=(const PolyDerivation& o) {
        check_ring(o.kind_);
        images_[0] -= o.images_[0];
        images_[1] -= o.images_[1];
        return *this;
    }
    PolyDerivation& operator*=(const Rational& s) {
        images_[0] *= s;
        images_[1] *= s;
        return *this;
    }

    friend PolyDerivation operator+(PolyDerivation l, const PolyDerivation& r) { return l += r; }
    friend PolyDerivation operator-(PolyDerivation l, const PolyDerivation& r) { return l -= r; }
    friend PolyDerivation operator*(const Rational& s, PolyDerivation d) { return d *= s; }
    friend PolyDerivation operator*(PolyDerivation d, const Rational& s) { return d *= s; }
    PolyDerivation operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const PolyDerivation& l, const PolyDerivation& r) {
        return l.kind_ == r.kind_ && l.images_[0] == r.images_[0] && l.images_[1] == r.images_[1];
    }

    /// Generators on which iterates are tested: x, y or t, u, u^-1.
    std::vector<Poly2> generators() const {
        std::vector<Poly2> g{Poly2::generator(kind_, 0), Poly2::generator(kind_, 1)};
        if (kind_ == RingKind::Laurent)
            g.push_back(Poly2::monomial(kind_, 1, 0, -1));
        return g;
    }

private:
    void check_ring(RingKind k) const {
        if (k != kind_)
            throw PreconditionError("derivation and argument live in different rings");
    }

    RingKind kind_;
    Poly2 images_[2];
};

/// [a, b] = a o b - b o a, evaluated on generators.
inline PolyDerivation bracket(const PolyDerivation& a, const PolyDerivation& b) {
    if (a.kind() != b.kind())
        throw PreconditionError("bracket of derivations on different rings");
    Poly2 g0 = a(b.image(0)) - b(a.image(0));
    Poly2 g1 = a(b.image(1)) - b(a.image(1));
    return {std::move(g0), std::move(g1)};
}

/// "P dx + Q dy" with P, Q in display form; multi-term coefficients are parenthesized.
inline std::string to_string(const PolyDerivation& d) {
    if (d.is_zero())
        return "0";
    std::string out;
    for (int i = 0; i < 2; ++i) {
        const Poly2& p = d.image(i);
        if (p.is_zero())
            continue;
        std::string dvar = std::string("d") + variable_name(d.kind(), i);
        bool negative_single = p.size() == 1 && p.terms().begin()->second < 0;
        const Poly2 shown = (negative_single && !out.empty()) ? -p : p;
        std::string coeff;
        if (shown.size() > 1) {
            coeff = "(" + to_string(shown) + ") ";
        } else {
            const auto& [e, c] = *shown.terms().begin();
            if (e.a == 0 && e.b == 0 && (c == 1 || c == -1))
                coeff = c == 1 ? "" : "-";
            else
                coeff = to_string(shown) + " ";
        }
        if (!out.empty())
            out += negative_single ? " - " : " + ";
        out += coeff + dvar;
    }
    return out;
}

/// Parses "P dx + Q dy" (or dt/du on the Laurent ring). Terms with the same
/// differential are added; a term without a differential is an error.
inline PolyDerivation parse_derivation(std::string_view text) {
    auto toks = detail::tokenize(text);
    RingKind kind = detail::ring_of(toks);
    detail::ExprParser parser(std::move(toks), kind);
    PolyDerivation out(kind);
    Poly2 images[2] = {Poly2(kind), Poly2(kind)};
    for (auto& s : parser.parse_summands()) {
        if (!s.dvar) {
            if (s.coeff.is_zero())
                continue;
            throw ParseError("term without differential in derivation '" + std::string(text) + "'");
        }
        images[*s.dvar] += s.coeff;
    }
    return {images[0], images[1]};
}

// ---------------------------------------------------------------------------
// Gradings

/// Integer weights of the generators; a monomial has weight w0 a + w1 b.
struct WeightGrading {
    long w0 = 1;
    long w1 = -1;

    WeightGrading() = default;
    WeightGrading(long a, long b) : w0(a), w1(b) {
        if (a == 0 && b == 0)
            throw PreconditionError("weight grading with all weights zero");
    }

    long degree(Exponent e) const { return w0 * e.a + w1 * e.b; }
    long weight(int index) const { return index == 0 ? w0 : w1; }
};

/// The derivation acting on homogeneous elements by their degree.
inline PolyDerivation grading_derivation(const WeightGrading& w, RingKind kind) {
    return PolyDerivation::euler(kind, w.w0, w.w1);
}

/// Unique decomposition into homogeneous parts; part i raises degree by exactly i.
inline std::map<long, PolyDerivation> homogeneous_components(const PolyDerivation& d, const WeightGrading& w) {
    std::map<long, PolyDerivation> out;
    for (int i = 0; i < 2; ++i) {
        for (const auto& [e, c] : d.image(i).terms()) {
            long deg = w.degree(e) - w.weight(i);
            auto [it, inserted] = out.try_emplace(deg, d.kind());
            Poly2 term = Poly2::monomial(d.kind(), c, e.a, e.b);
            it->second += i == 0 ? PolyDerivation(term, Poly2(d.kind())) : PolyDerivation(Poly2(d.kind()), term);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Local nilpotence

inline constexpr int kDefaultLndBound = 64;

/// nilpotent: d^order kills every generator. Otherwise inconclusive up to bound.
struct LndVerdict {
    bool nilpotent = false;
    int order = 0;
    int bound = 0;
};

inline std::string to_string(const LndVerdict& v) {
    return v.nilpotent ? "Nilpotent(" + std::to_string(v.order) + ")"
                       : "NotNilpotentWithinBound(" + std::to_string(v.bound) + ")";
}

inline LndVerdict is_lnd(const PolyDerivation& d, int bound = kDefaultLndBound) {
    if (bound < 1)
        throw PreconditionError("LND bound must be at least 1");
    int order = 0;
    for (const Poly2& g : d.generators()) {
        Poly2 cur = g;
        int k = 0;
        while (!cur.is_zero()) {
            if (k == bound)
                return {false, 0, bound};
            cur = d(cur);
            ++k;
        }
        order = std::max(order, k);
    }
    return {true, order, bound};
}

}  // namespace cstar
