#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qweyl/cyclotomic.hpp"
#include "qweyl/errors.hpp"

namespace qweyl {

/// Dense square-or-rectangular matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw InputError("ragged integer matrix");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<std::vector<Integer>> to_rows() const {
        std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (sgn(v) != 0) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += c * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& c) {
        if (sgn(c) == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
    }
    /// col[dst] += c * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& c) {
        if (sgn(c) == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw InputError("integer matrix shape mismatch");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (sgn(a(i, k)) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw InputError("determinant of non-square matrix");
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Integer skew-symmetric matrix: zero diagonal, entries[j][i] = -entries[i][j].
class IntSkewMat {
public:
    IntSkewMat() = default;

    explicit IntSkewMat(IntMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw InputError("skew matrix must be square");
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = 0; j < m_.cols(); ++j)
                if (m_(i, j) != -m_(j, i)) throw InputError("matrix is not skew-symmetric");
    }

    static IntSkewMat zero(std::size_t size) { return IntSkewMat(IntMatrix(size, size)); }

    std::size_t size() const { return m_.rows(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const IntMatrix& matrix() const { return m_; }

    /// Sets (i, j) and the mirrored (j, i) entry.
    void set(std::size_t i, std::size_t j, const Integer& v) {
        if (i == j) {
            if (sgn(v) != 0) throw InputError("skew matrix diagonal must be zero");
            return;
        }
        m_(i, j) = v;
        m_(j, i) = -v;
    }

    friend bool operator==(const IntSkewMat&, const IntSkewMat&) = default;

private:
    IntMatrix m_;
};

} // namespace qweyl
