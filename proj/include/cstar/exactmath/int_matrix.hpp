#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cstar/errors.hpp"
#include "cstar/exactmath/rational.hpp"

namespace cstar {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw PreconditionError("matrix dimensions must be positive");
    }

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
        : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw PreconditionError("ragged matrix literal");
            std::size_t j = 0;
            for (long v : row)
                (*this)(i, j++) = v;
            ++i;
        }
    }

    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
        if (rows.empty())
            throw PreconditionError("matrix dimensions must be positive");
        IntMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw PreconditionError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Integer> row(std::size_t i) const {
        return {data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_)};
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw PreconditionError("matrix dimension mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0)
                    return false;
        return true;
    }

    /// Fraction-free (Bareiss) determinant of a square matrix.
    Integer determinant() const {
        if (rows_ != cols_)
            throw PreconditionError("determinant of a non-square matrix");
        IntMatrix a = *this;
        const std::size_t n = rows_;
        Integer sign = 1;
        Integer prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0)
                    ++p;
                if (p == n)
                    return 0;
                a.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                    mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                }
            prev = a(k, k);
        }
        return sign * a(n - 1, n - 1);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, i), (*this)(r, j));
    }

    /// row_i += k * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Integer& k) {
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(i, c) += k * (*this)(j, c);
    }

    /// col_i += k * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const Integer& k) {
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, i) += k * (*this)(r, j);
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(i, c) = -(*this)(i, c);
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

inline std::string to_string(const IntMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            out += (j ? "," : "") + m(i, j).get_str();
        out += "]";
    }
    return out + "]";
}

}  // namespace cstar
