#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cstar/cstar.hpp"

namespace testing_support {

using namespace cstar;

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

/// Divisor on the affine line from (point, coeff) pairs.
inline QDivisor div(std::initializer_list<std::pair<Rational, Rational>> e,
                    CurveKind c = CurveKind::AffineLine) {
    return QDivisor(c, e);
}

inline DpdPresentation hyp(QDivisor plus, QDivisor minus) {
    return DpdPresentation::hyperbolic(std::move(plus), std::move(minus));
}

/// Deterministic source of random exact data.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long num_bound = 6, long den_bound = 4) {
        return make_rational(integer(-num_bound, num_bound), integer(1, den_bound));
    }
    Rational nonzero_rational(long num_bound = 6, long den_bound = 4) {
        for (;;) {
            Rational r = rational(num_bound, den_bound);
            if (r != 0)
                return r;
        }
    }

    Poly2 poly(RingKind kind, int terms = 4, int max_deg = 3) {
        Poly2 p(kind);
        int lo_b = kind == RingKind::Laurent ? -max_deg : 0;
        for (int k = 0; k < terms; ++k)
            p.add_term({static_cast<int>(integer(0, max_deg)), static_cast<int>(integer(lo_b, max_deg))},
                       rational());
        return p;
    }

    PolyDerivation derivation(RingKind kind, int terms = 3, int max_deg = 3) {
        return {poly(kind, terms, max_deg), poly(kind, terms, max_deg)};
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(integer(0, static_cast<long>(v.size()) - 1))];
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline const std::vector<Rational> kPoints{q(0), q(1), q(-1), q(2), q(1, 2), q(-3)};

/// A random pair with D+ + D- <= 0 on the affine line.
inline DivisorPair random_pair(Gen& g, CurveKind curve = CurveKind::AffineLine) {
    QDivisor plus(curve), minus(curve);
    int n = static_cast<int>(g.integer(1, 3));
    for (int k = 0; k < n; ++k) {
        Rational p = g.pick(kPoints);
        if (curve == CurveKind::PuncturedLine && p == 0)
            continue;
        Rational a = g.rational(5, 4);
        Rational slack = g.coin() ? Rational(0) : make_rational(g.integer(1, 6), g.integer(1, 3));
        plus.add(Point::at(p), a);
        minus.add(Point::at(p), -a - slack);
    }
    return {plus, minus};
}

inline FactoredRational random_function(Gen& g, CurveKind curve = CurveKind::AffineLine) {
    std::vector<RootFactor> f;
    for (int k = 0; k < 2; ++k) {
        Rational r = g.pick(kPoints);
        if (curve == CurveKind::PuncturedLine && r == 0)
            continue;
        f.push_back({r, static_cast<int>(g.integer(-2, 2))});
    }
    return FactoredRational(g.nonzero_rational(), f);
}

inline EquivalenceWitness random_witness(Gen& g, CurveKind curve = CurveKind::AffineLine) {
    Rational a = g.pick(std::vector<Rational>{q(1), q(-1), q(2), q(-1, 2), q(3)});
    Rational b = curve == CurveKind::PuncturedLine ? Rational(0) : g.rational(3, 2);
    return {AffineMap(a, b), random_function(g, curve), g.coin()};
}

/// Values (D+(p), D-(p)) with e+ m- - e- m+ = -1, built from an extended gcd
/// solution so that smoothness holds by construction.
struct SmoothPoint {
    Integer e_plus, m_plus, e_minus, m_minus;
    Rational plus() const { return canonical(Rational(-e_plus, m_plus)); }
    Rational minus() const { return canonical(Rational(e_minus, m_minus)); }

    static Rational canonical(Rational r) {
        r.canonicalize();
        return r;
    }
};

inline SmoothPoint random_smooth_point(Gen& g, long m_bound = 6, long e_bound = 6) {
    for (;;) {
        Integer mp = g.integer(1, m_bound);
        Integer ep = g.integer(-e_bound, e_bound);
        if (gcd_of(mp, ep) != 1)
            continue;
        // x mp - y ep = 1, then shift along (ep, mp) until m- < 0
        Integer gg, x, y;
        Integer neg_ep = -ep;
        mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), mp.get_mpz_t(), neg_ep.get_mpz_t());
        Integer em = x, mm = y;
        Integer k = -g.integer(0, 3);
        while (mm + k * mp >= 0)
            --k;
        em += k * ep;
        mm += k * mp;
        return SmoothPoint{ep, mp, em, mm};
    }
}

/// Comparable summary of the presentation invariants.
struct InvariantSnapshot {
    std::string ml;
    std::size_t l = 0;
    std::vector<Integer> fiber_multiplicities;
    bool smooth = false;
    std::string class_group;
    std::string canonical;

    friend bool operator==(const InvariantSnapshot&, const InvariantSnapshot&) = default;
};

inline InvariantSnapshot snapshot(const DpdPresentation& p) {
    InvariantSnapshot s;
    s.ml = p.pair().sum().is_zero() ? "n/a" : to_string(ml_class(p));
    s.l = negative_points(p).size();
    for (const auto& f : multiple_fibers(p))
        s.fiber_multiplicities.push_back(f.multiplicity);
    std::sort(s.fiber_multiplicities.begin(), s.fiber_multiplicities.end());
    s.smooth = is_smooth(p);
    if (s.fiber_multiplicities.empty()) {
        s.class_group = to_string(class_group(p));
        s.canonical = canonical_class(p).trivial ? "trivial" : "nontrivial";
    }
    return s;
}

// ---------------------------------------------------------------------------
// Derivations

inline Poly2 mono(RingKind kind, const Rational& c, int a, int b) { return Poly2::monomial(kind, c, a, b); }

/// a x d/dx + b y d/dy (or the same on t, u).
inline PolyDerivation random_diagonal(Gen& g, RingKind kind = RingKind::Polynomial) {
    return PolyDerivation::euler(kind, g.rational(5, 3), g.rational(5, 3));
}

/// A single-term locally nilpotent derivation: c x^k d/dy, c y^k d/dx, or c u^m d/dt.
inline PolyDerivation random_monomial_lnd(Gen& g, RingKind kind = RingKind::Polynomial) {
    Rational c = g.nonzero_rational();
    Poly2 zero(kind);
    if (kind == RingKind::Laurent)
        return {mono(kind, c, 0, static_cast<int>(g.integer(-3, 3))), zero};
    int k = static_cast<int>(g.integer(0, 4));
    if (g.coin())
        return {zero, mono(kind, c, k, 0)};
    return {mono(kind, c, 0, k), zero};
}

/// c x^k d/dy, homogeneous of degree k + 1 for the weights (1, -1).
inline PolyDerivation random_positive_lnd(Gen& g) {
    return {Poly2(RingKind::Polynomial),
            mono(RingKind::Polynomial, g.nonzero_rational(), static_cast<int>(g.integer(0, 4)), 0)};
}

/// (x, y) -> (alpha x, gamma y + p(x)) with deg p <= max_deg, and its inverse.
inline std::pair<RingMap, RingMap> random_triangular(Gen& g, int max_deg = 4) {
    const RingKind k = RingKind::Polynomial;
    Rational alpha = g.nonzero_rational(3, 2), gamma = g.nonzero_rational(3, 2);
    Poly2 p(k);
    int deg = static_cast<int>(g.integer(1, max_deg));
    for (int i = 0; i <= deg; ++i)
        p.add_term({i, 0}, i == deg ? g.nonzero_rational() : g.rational());
    RingMap phi(mono(k, alpha, 1, 0), mono(k, gamma, 0, 1) + p);
    RingMap scale_back(mono(k, 1 / alpha, 1, 0), Poly2::generator(k, 1));
    Poly2 p_back = scale_back(p);
    RingMap phi_inv(mono(k, 1 / alpha, 1, 0), (Poly2::generator(k, 1) - p_back) * (1 / gamma));
    return {phi, phi_inv};
}

/// D(fg) - f D(g) - D(f) g.
inline Poly2 leibniz_residual(const PolyDerivation& d, const Poly2& f, const Poly2& h) {
    return d(f * h) - f * d(h) - d(f) * h;
}

/// Random rational 2x2 matrix with rational eigenvalues: P J P^-1.
inline std::array<Rational, 4> random_rational_spectrum(Gen& g) {
    Rational l1 = g.rational(4, 2), l2 = g.coin() ? l1 : g.rational(4, 2);
    Rational off = l1 == l2 && g.coin() ? g.nonzero_rational(3, 1) : Rational(0);
    Rational p00, p01, p10, p11, det;
    do {
        p00 = g.integer(-3, 3), p01 = g.integer(-3, 3), p10 = g.integer(-3, 3), p11 = g.integer(-3, 3);
        det = p00 * p11 - p01 * p10;
    } while (det == 0);
    // J = [[l1, off], [0, l2]]
    Rational a = p00 * l1, b = p00 * off + p01 * l2, c = p10 * l1, d = p10 * off + p11 * l2;
    Rational i00 = p11 / det, i01 = -p01 / det, i10 = -p10 / det, i11 = p00 / det;
    return {a * i00 + b * i10, a * i01 + b * i11, c * i00 + d * i10, c * i01 + d * i11};
}

}  // namespace testing_support
