#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cstar/exactmath/int_matrix.hpp"

namespace cstar {

/// U * M * V = S with U, V unimodular; the inverses are tracked alongside.
struct SmithForm {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
    IntMatrix U_inv;
    IntMatrix V_inv;
    std::size_t rank = 0;

    /// min(rows, cols) diagonal entries s_1 | s_2 | ... (trailing zeros included).
    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
            d.push_back(S(i, i));
        return d;
    }
};

namespace detail {

struct SmithWork {
    IntMatrix A, U, U_inv, V, V_inv;

    void swap_rows(std::size_t i, std::size_t j) {
        A.swap_rows(i, j);
        U.swap_rows(i, j);
        U_inv.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        A.swap_cols(i, j);
        V.swap_cols(i, j);
        V_inv.swap_rows(i, j);
    }
    // row_i += k row_j
    void add_row(std::size_t i, std::size_t j, const Integer& k) {
        A.add_row_multiple(i, j, k);
        U.add_row_multiple(i, j, k);
        U_inv.add_col_multiple(j, i, -k);
    }
    // col_i += k col_j
    void add_col(std::size_t i, std::size_t j, const Integer& k) {
        A.add_col_multiple(i, j, k);
        V.add_col_multiple(i, j, k);
        V_inv.add_row_multiple(j, i, -k);
    }
    void negate_row(std::size_t i) {
        A.negate_row(i);
        U.negate_row(i);
        for (std::size_t r = 0; r < U_inv.rows(); ++r)
            U_inv(r, i) = -U_inv(r, i);
    }
};

}  // namespace detail

/// Smith normal form with smallest-|entry| pivoting; rows and columns are
/// scanned in index order so the transforms are reproducible.
inline SmithForm smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    detail::SmithWork w{M, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
                        IntMatrix::identity(n)};
    auto& A = w.A;
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Global smallest pivot in the trailing block.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (A(i, j) != 0 && (!best || abs_of(A(i, j)) < abs_of(A(best->first, best->second))))
                    best = {i, j};
        if (!best)
            break;
        w.swap_rows(t, best->first);
        w.swap_cols(t, best->second);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A(i, t) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
                w.add_row(i, t, -q);
                if (A(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A(t, j) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
                w.add_col(j, t, -q);
                if (A(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // Bring the smallest remainder in row/column t to the pivot.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (A(i, t) != 0 && abs_of(A(i, t)) < abs_of(A(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A(t, j) != 0 && abs_of(A(t, j)) < abs_of(A(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            w.add_row(t, *bad_row, 1);
        }
        if (A(t, t) < 0)
            w.negate_row(t);
    }
    return SmithForm{std::move(w.A), std::move(w.U), std::move(w.V), std::move(w.U_inv),
                     std::move(w.V_inv), t};
}

/// Finitely generated abelian group Z^n / (row lattice of the relations).
struct AbelianGroup {
    std::vector<std::string> generators;
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

    // Reduction data: x maps to x * V; coordinate j < factors.size() is read mod factors[j].
    std::vector<Integer> factors;
    std::optional<IntMatrix> V;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    /// Image of x (coordinates on the generators) in Z^free x prod Z/t_i.
    std::vector<Integer> reduce(std::span<const Integer> x) const {
        if (x.size() != generators.size())
            throw PreconditionError("element has wrong number of coordinates");
        std::vector<Integer> y(x.begin(), x.end());
        if (V) {
            std::vector<Integer> z(y.size());
            for (std::size_t j = 0; j < y.size(); ++j)
                for (std::size_t i = 0; i < y.size(); ++i)
                    z[j] += y[i] * (*V)(i, j);
            y = std::move(z);
        }
        std::vector<Integer> out;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (j < factors.size()) {
                if (factors[j] != 1)
                    out.push_back(mod_of(y[j], factors[j]));
            } else {
                out.push_back(y[j]);
            }
        }
        return out;
    }

    /// True when x lies in the relation lattice.
    bool is_zero(std::span<const Integer> x) const {
        for (const auto& c : reduce(x))
            if (c != 0)
                return false;
        return true;
    }
};

inline AbelianGroup abelian_group_from_relations(std::vector<std::string> gens,
                                                 const std::vector<std::vector<Integer>>& rels) {
    AbelianGroup g;
    g.generators = std::move(gens);
    const std::size_t n = g.generators.size();
    for (const auto& r : rels)
        if (r.size() != n)
            throw PreconditionError("relation row length differs from generator count");
    if (rels.empty() || n == 0) {
        g.free_rank = n;
        return g;
    }
    SmithForm snf = smith_normal_form(IntMatrix::from_rows(rels));
    g.free_rank = n - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i) {
        g.factors.push_back(snf.S(i, i));
        if (snf.S(i, i) > 1)
            g.torsion.push_back(snf.S(i, i));
    }
    g.V = std::move(snf.V);
    return g;
}

inline AbelianGroup abelian_group_from_relations(std::vector<std::string> gens, const IntMatrix& rels) {
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < rels.rows(); ++i)
        rows.push_back(rels.row(i));
    return abelian_group_from_relations(std::move(gens), rows);
}

inline std::string to_string(const AbelianGroup& g) {
    if (g.is_trivial())
        return "0";
    std::string out;
    if (g.free_rank > 0)
        out = g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
    for (const auto& t : g.torsion)
        out += (out.empty() ? "" : " + ") + ("Z/" + t.get_str());
    return out;
}

}  // namespace cstar
