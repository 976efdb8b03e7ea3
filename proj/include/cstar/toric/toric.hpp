#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cstar/dpd/invariants.hpp"
#include "cstar/toric/calibration_table.hpp"

namespace cstar {

/// V_{d,e} = A^2 / Z_d with zeta.X = zeta X, zeta.Y = zeta^e Y; 0 <= e < d, gcd(e, d) = 1.
struct ToricData {
    long d = 1;
    long e = 0;

    ToricData() = default;
    ToricData(long d_, long e_) : d(d_), e(e_) {
        if (d < 1)
            throw PreconditionError("V_{d,e} needs d >= 1");
        if (e < 0 || e >= d)
            throw PreconditionError("V_{d,e} needs 0 <= e < d");
        if (std::gcd(d, e) != 1)
            throw PreconditionError("V_{d,e} needs gcd(e, d) = 1");
    }

    friend bool operator==(const ToricData&, const ToricData&) = default;
};

inline std::string to_string(const ToricData& t) {
    return "V" + std::to_string(t.d) + "," + std::to_string(t.e);
}

/// Parses "Vd,e", e.g. "V5,2".
inline ToricData parse_toric(std::string_view text) {
    if (text.size() < 4 || text.front() != 'V')
        throw ParseError("expected Vd,e but got '" + std::string(text) + "'");
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("expected Vd,e but got '" + std::string(text) + "'");
    auto parse_long = [&](std::string_view s) {
        Rational q = parse_rational(s);
        if (!is_integral(q))
            throw ParseError("non-integer in '" + std::string(text) + "'");
        return to_long(q.get_num());
    };
    return ToricData(parse_long(text.substr(1, comma - 1)), parse_long(text.substr(comma + 1)));
}

/// e^-1 mod d (d = 1 gives 0).
inline long inverse_mod(long e, long d) {
    if (d == 1)
        return 0;
    Integer inv;
    Integer ee = e, dd = d;
    if (mpz_invert(inv.get_mpz_t(), ee.get_mpz_t(), dd.get_mpz_t()) == 0)
        throw PreconditionError("e is not invertible mod d");
    return to_long(inv);
}

/// Isomorphism of V_{d,e} and V_{d',e'}: d = d' and (e = e' or e e' = 1 mod d).
inline bool vde_isomorphic(const ToricData& a, const ToricData& b) {
    if (a.d != b.d)
        return false;
    if (a.e == b.e)
        return true;
    Integer prod = Integer(a.e) * b.e;
    return mod_of(prod, Integer(a.d)) == mod_of(Integer(1), Integer(a.d));
}

/// Smallest member of {e, e^-1 mod d}.
inline long isomorphism_representative(long d, long e) { return std::min(e, inverse_mod(e, d)); }

struct MonomialExponent {
    long a = 0;  // power of X
    long b = 0;  // power of Y
    friend bool operator==(const MonomialExponent&, const MonomialExponent&) = default;
};

/// Hilbert basis of {(a, b) in N^2 : a + e b = 0 mod d}, sorted by descending a.
inline std::vector<MonomialExponent> invariant_basis(const ToricData& t) {
    std::vector<MonomialExponent> members;
    for (long a = 0; a <= t.d; ++a)
        for (long b = 0; b <= t.d; ++b)
            if ((a || b) && (a + t.e * b) % t.d == 0)
                members.push_back({a, b});
    std::vector<MonomialExponent> basis;
    for (const auto& w : members) {
        bool decomposable = false;
        for (const auto& v : members) {
            if (v == w || v.a > w.a || v.b > w.b)
                continue;
            MonomialExponent rest{w.a - v.a, w.b - v.b};
            if (std::find(members.begin(), members.end(), rest) != members.end()) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable)
            basis.push_back(w);
    }
    std::sort(basis.begin(), basis.end(), [](const auto& l, const auto& r) { return l.a > r.a; });
    return basis;
}

inline std::string monomial_name(const MonomialExponent& m) {
    std::string s;
    if (m.a)
        s += m.a == 1 ? "x" : "x^" + std::to_string(m.a);
    if (m.b)
        s += m.b == 1 ? "y" : "y^" + std::to_string(m.b);
    return s.empty() ? "1" : s;
}

/// Recovers q from the sequence floor(i q), i = 1..N. Exact when the
/// denominator of q is at most N.
inline Rational rational_from_floors(const std::vector<Integer>& floors) {
    const std::size_t n = floors.size();
    for (std::size_t r = 1; r <= n; ++r) {
        Rational candidate(floors[r - 1], Integer(static_cast<long>(r)));
        candidate.canonicalize();
        bool ok = true;
        for (std::size_t i = 1; i <= n && ok; ++i)
            ok = floor_of(candidate * Rational(static_cast<long>(i))) == floors[i - 1];
        if (ok)
            return candidate;
    }
    throw UnsupportedError("floor sequence does not determine a rational within the cap");
}

/// Result of extract_dpd together with the monomials that realize it.
struct ToricExtraction {
    DpdPresentation presentation;
    MonomialExponent t;  // generator of A0 = C[t]
    MonomialExponent u;  // minimal invariant monomial of rescaled degree 1
    long degree_gcd = 1;
};

/// DPD pair of A_{d,e} graded by deg X = wx > 0 > wy = deg Y, after dividing
/// degrees by their gcd. Supported at 0 on the affine line.
inline ToricExtraction extract_dpd(const ToricData& T, long wx, long wy, int degree_cap = kDefaultDegreeCap) {
    if (!(wx > 0 && wy < 0))
        throw PreconditionError("grading not hyperbolic: need w_X > 0 > w_Y");
    long g = 0;
    for (const auto& m : invariant_basis(T))
        g = std::gcd(g, wx * m.a + wy * m.b);
    g = std::abs(g);

    // Degree-0 invariants: multiples of the primitive (-wy, wx) that satisfy the congruence.
    long h = std::gcd(wx, -wy);
    MonomialExponent dir{-wy / h, wx / h};
    long k = 1;
    while ((k * (dir.a + T.e * dir.b)) % T.d != 0)
        ++k;
    MonomialExponent t{k * dir.a, k * dir.b};

    auto invariant = [&](long a, long b) { return (a + T.e * b) % T.d == 0; };
    // Invariant monomials of degree i*g form {m + j t : j >= 0}; find m (smallest a).
    auto min_monomial = [&](long i) -> MonomialExponent {
        long target = i * g;
        long start = 0;
        if (i > 0)
            start = (target + wx - 1) / wx;
        for (long a = start; a <= start + t.a; ++a) {
            long rest = target - wx * a;
            if (rest % wy != 0)
                continue;
            long b = rest / wy;
            if (b >= 0 && invariant(a, b))
                return {a, b};
        }
        throw UnsupportedError("degree " + std::to_string(i) + " piece empty after rescaling");
    };

    MonomialExponent u = min_monomial(1);
    const long n = std::max<long>({degree_cap, t.a, t.b});
    auto floors = [&](long sign) {
        std::vector<Integer> out;
        for (long i = 1; i <= n; ++i) {
            MonomialExponent m = min_monomial(sign * i);
            long da = m.a - sign * i * u.a;
            long db = m.b - sign * i * u.b;
            if (da % t.a != 0 || da / t.a * t.b != db)
                throw UnsupportedError("graded piece is not A0 * u^i * t^k");
            out.push_back(Integer(-(da / t.a)));
        }
        return out;
    };
    Rational qplus = rational_from_floors(floors(1));
    Rational qminus = rational_from_floors(floors(-1));
    QDivisor plus = QDivisor::single(CurveKind::AffineLine, Point::at(0), qplus);
    QDivisor minus = QDivisor::single(CurveKind::AffineLine, Point::at(0), qminus);
    return {DpdPresentation::hyperbolic(std::move(plus), std::move(minus)), t, u, g};
}

/// Normal form (d, c) of an ordered pair of primitive vectors under GL2(Z).
struct LatticeInvariant {
    Integer d;
    Integer c;
    friend bool operator==(const LatticeInvariant& l, const LatticeInvariant& r) {
        return l.d == r.d && l.c == r.c;
    }
    friend bool operator<(const LatticeInvariant& l, const LatticeInvariant& r) {
        return l.d != r.d ? l.d < r.d : l.c < r.c;
    }
};

struct Vec2 {
    Integer x;
    Integer y;
};

/// Lattice pair Z(e+, d+) + Z(e-, d-) with d+ > 0 > d- and primitive vectors.
struct LatticePair {
    Vec2 vplus;
    Vec2 vminus;

    LatticePair(Vec2 plus, Vec2 minus) : vplus(std::move(plus)), vminus(std::move(minus)) {
        if (!(vplus.y > 0 && vminus.y < 0))
            throw PreconditionError("lattice pair needs d+ > 0 > d-");
        if (gcd_of(vplus.x, vplus.y) != 1 || gcd_of(vminus.x, vminus.y) != 1)
            throw PreconditionError("lattice pair vectors must be primitive");
        if (vplus.x * vminus.y - vminus.x * vplus.y == 0)
            throw PreconditionError("lattice pair vectors are dependent");
    }
};

namespace detail {

/// Sends `first` to (0, 1) and reduces the image (a, b) of `second` by the
/// stabilizer {(eps, 0; c, 1)} to (|a|, b mod |a|).
inline LatticeInvariant ordered_invariant(const Vec2& first, const Vec2& second) {
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), first.x.get_mpz_t(), first.y.get_mpz_t());
    if (g != 1)
        throw PreconditionError("lattice vector is not primitive");
    // A = [[d, -e], [x, y]] has det 1 and A * (e, d) = (0, 1).
    Integer a = first.y * second.x - first.x * second.y;
    Integer b = x * second.x + y * second.y;
    if (a == 0)
        throw PreconditionError("lattice vectors are dependent");
    Integer d = abs_of(a);
    return {d, mod_of(b, d)};
}

}  // namespace detail

/// Lexicographically smaller of the invariants of (v1, v2) and (v2, v1).
inline LatticeInvariant lattice_invariant(const Vec2& v1, const Vec2& v2) {
    return std::min(detail::ordered_invariant(v1, v2), detail::ordered_invariant(v2, v1));
}

inline LatticeInvariant lattice_invariant(const LatticePair& l) { return lattice_invariant(l.vplus, l.vminus); }

/// Lattice pair read off a hyperbolic presentation concentrated at a single point.
inline LatticePair lattice_pair_of(const NegPointData& np) {
    return LatticePair({np.e_plus, np.m_plus}, {np.e_minus, np.m_minus});
}

/// Lattice normal form c of extract_dpd(V_{d,e}) for each e coprime to d.
inline std::vector<CalibrationEntry> calibrate(long d) {
    std::vector<CalibrationEntry> out;
    for (long e = 0; e < d; ++e) {
        if (std::gcd(d, e) != 1)
            continue;
        auto ex = extract_dpd(ToricData(d, e), 1, -1);
        auto pts = negative_points(ex.presentation);
        if (pts.size() != 1)
            throw UnsupportedError("toric extraction is not concentrated at one point");
        LatticeInvariant inv = lattice_invariant(lattice_pair_of(pts.front()));
        out.push_back({d, to_long(inv.c), isomorphism_representative(d, e)});
    }
    return out;
}

/// representative of the isomorphism class for lattice normal form (d, c), if any.
inline std::optional<long> calibrated_character(long d, long c) {
    if (d <= kCalibrationMaxD) {
        for (const auto& entry : kCalibrationTable)
            if (entry.d == d && entry.c == c)
                return entry.e;
        return std::nullopt;
    }
    for (const auto& entry : calibrate(d))
        if (entry.c == c)
            return entry.e;
    return std::nullopt;
}

struct ToricRecognition {
    ToricData data;
    LatticeInvariant invariant;
    DivisorPair normalized;       // supported at 0 only
    EquivalenceWitness witness;   // carries the input pair to `normalized`
};

/// Recognizes A0[D+, D-] as V_{d,e} when D+ + D- is concentrated at one point
/// and there are no multiple fibers.
inline std::optional<ToricRecognition> recognize_toric(const DpdPresentation& p) {
    auto pts = negative_points(p);
    if (pts.size() != 1 || !multiple_fibers(p).empty())
        return std::nullopt;
    const auto& pair = p.pair();
    const Rational p0 = pts.front().point;

    std::vector<RootFactor> factors;
    for (const auto& [pt, c] : pair.dplus.entries())
        if (pt.value != p0)
            factors.push_back({pt.value, -static_cast<int>(to_long(c.get_num()))});
    FactoredRational f(1, std::move(factors));
    AffineMap to_origin(1, p0);
    EquivalenceWitness w{to_origin, pullback(f, to_origin), false};
    DivisorPair normalized = apply_witness(pair, w);

    NegPointData at0 = encode_point(0, normalized.dplus.at(0), normalized.dminus.at(0));
    LatticeInvariant inv = lattice_invariant(lattice_pair_of(at0));
    auto e = calibrated_character(to_long(inv.d), to_long(inv.c));
    if (!e)
        return std::nullopt;
    return ToricRecognition{ToricData(to_long(inv.d), *e), inv, normalized, w};
}

}  // namespace cstar
