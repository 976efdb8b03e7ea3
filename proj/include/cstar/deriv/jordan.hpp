#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cstar/deriv/derivation.hpp"
#include "cstar/exactmath/smith.hpp"

namespace cstar {

namespace detail {

/// Exact square root of a non-negative rational, if it is a square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0)
        return std::nullopt;
    const Integer& n = q.get_num();
    const Integer& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

/// Coefficients (a, b, c, d) with delta(x) = a x + b y and delta(y) = c x + d y.
inline std::array<Rational, 4> linear_matrix(const PolyDerivation& d) {
    if (d.kind() != RingKind::Polynomial)
        throw PreconditionError("linear derivations live on Q[x,y]");
    std::array<Rational, 4> m;
    for (int i = 0; i < 2; ++i) {
        for (const auto& [e, c] : d.image(i).terms())
            if (e.a + e.b != 1)
                throw PreconditionError("jordan_chevalley requires linear images, got " + to_string(d.image(i)));
        m[2 * i] = d.image(i).coeff({1, 0});
        m[2 * i + 1] = d.image(i).coeff({0, 1});
    }
    return m;
}

inline Poly2 linear_form(const Rational& p, const Rational& q) {
    Poly2 f(RingKind::Polynomial);
    f.add_term({1, 0}, p);
    f.add_term({0, 1}, q);
    return f;
}

inline PolyDerivation linear_derivation(const std::array<Rational, 4>& m) {
    return {linear_form(m[0], m[1]), linear_form(m[2], m[3])};
}

}  // namespace detail

/// delta = semisimple + nilpotent. eigenforms are linear forms l1, l2 with
/// (delta - eigenvalues[i]) l_i nilpotent; the monomials l1^i l2^j span the
/// generalized eigenspaces.
struct JordanParts {
    PolyDerivation semisimple;
    PolyDerivation nilpotent;
    std::array<Rational, 2> eigenvalues;
    std::array<Poly2, 2> eigenforms;
};

inline JordanParts jordan_chevalley(const PolyDerivation& delta) {
    auto [a, b, c, d] = detail::linear_matrix(delta);
    // delta acts on coefficient vectors (p, q) of p x + q y by the transpose.
    Rational disc = (a - d) * (a - d) + 4 * b * c;
    auto root = detail::rational_sqrt(disc);
    if (!root)
        throw UnsupportedError("eigenvalues of the linear part are not rational (discriminant " +
                               to_string(disc) + ")");
    Rational half_trace = (a + d) / 2;
    Rational l1 = half_trace + *root / 2;
    Rational l2 = half_trace - *root / 2;

    auto eigenvector = [&](const Rational& l) -> std::array<Rational, 2> {
        if (a != l || c != 0)
            return {c, l - a};
        if (b != 0 || d != l)
            return {l - d, b};
        return {1, 0};
    };

    JordanParts out{delta, PolyDerivation(RingKind::Polynomial), {l1, l2},
                    {Poly2(RingKind::Polynomial), Poly2(RingKind::Polynomial)}};
    auto v1 = eigenvector(l1);
    out.eigenforms[0] = detail::linear_form(v1[0], v1[1]);
    if (disc == 0) {
        out.semisimple = detail::linear_derivation({l1, 0, 0, l1});
        out.nilpotent = detail::linear_derivation({a - l1, b, c, d - l1});
        out.eigenforms[1] = v1[1] == 0 ? detail::linear_form(0, 1) : detail::linear_form(1, 0);
    } else {
        auto v2 = eigenvector(l2);
        out.eigenforms[1] = detail::linear_form(v2[0], v2[1]);
    }
    return out;
}

/// (delta - mu)^k f = 0 for some k <= bound.
inline bool in_generalized_eigenspace(const PolyDerivation& delta, const Poly2& f, const Rational& mu,
                                      int bound = kDefaultLndBound) {
    Poly2 cur = f;
    for (int k = 0; k <= bound; ++k) {
        if (cur.is_zero())
            return true;
        cur = delta(cur) - cur * mu;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Eigenvalue lattice

/// rank = rank of Z M. basis spans Z M inside Q^m; coords[k] writes vectors[k]
/// in that basis, giving the surjection M -> Z^rank.
struct EigenData {
    std::vector<std::vector<Rational>> vectors;
    std::size_t rank = 0;
    std::vector<std::vector<Rational>> basis;
    std::vector<std::vector<Integer>> coords;
};

inline EigenData eigen_lattice(const std::vector<std::vector<Rational>>& vectors) {
    EigenData out;
    out.vectors = vectors;
    if (vectors.empty())
        return out;
    const std::size_t m = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != m)
            throw PreconditionError("eigenvalue tuples of different lengths");
    if (m == 0) {
        out.coords.assign(vectors.size(), {});
        return out;
    }
    Integer lcm = 1;
    for (const auto& v : vectors)
        for (const auto& q : v)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<std::vector<Integer>> rows;
    for (const auto& v : vectors) {
        std::vector<Integer> r;
        for (const auto& q : v)
            r.push_back(Integer(q * lcm));
        rows.push_back(std::move(r));
    }
    SmithForm snf = smith_normal_form(IntMatrix::from_rows(rows));
    out.rank = snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i) {
        std::vector<Rational> b;
        for (std::size_t j = 0; j < m; ++j)
            b.push_back(Rational(snf.S(i, i) * snf.V_inv(i, j), lcm));
        for (auto& q : b)
            q.canonicalize();
        out.basis.push_back(std::move(b));
    }
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        std::vector<Integer> c;
        for (std::size_t i = 0; i < snf.rank; ++i)
            c.push_back(snf.U_inv(k, i));
        out.coords.push_back(std::move(c));
    }
    return out;
}

}  // namespace cstar
