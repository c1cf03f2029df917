#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qweyl/cyclotomic.hpp"
#include "qweyl/errors.hpp"

namespace qweyl {

using CycloVector = std::vector<CycloNum>;

/// Dense matrix over Q(zeta_L) for one fixed L.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, std::int64_t order)
        : rows_(rows), cols_(cols), order_(order), data_(rows * cols, CycloNum::zero(order)) {}

    static Matrix identity(std::size_t n, std::int64_t order) { return scalar(n, CycloNum::one(order)); }

    static Matrix scalar(std::size_t n, const CycloNum& c) {
        Matrix m(n, n, c.order());
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t order() const { return order_; }

    CycloNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycloNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const CycloVector& data() const { return data_; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }

    /// The c with M = c * identity, if any.
    std::optional<CycloNum> scalar_value() const {
        if (rows_ != cols_ || rows_ == 0 || !is_diagonal()) return std::nullopt;
        for (std::size_t i = 1; i < rows_; ++i)
            if ((*this)(i, i) != (*this)(0, 0)) return std::nullopt;
        return (*this)(0, 0);
    }

    /// First row index where the two matrices differ.
    std::optional<std::size_t> first_difference(const Matrix& o) const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != o(i, j)) return i;
        return std::nullopt;
    }

    Matrix& operator+=(const Matrix& o) {
        require_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const CycloNum& c) {
        for (auto& v : data_)
            if (!v.is_zero()) v *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const CycloNum& c) { return a *= c; }
    friend Matrix operator*(const CycloNum& c, Matrix a) { return a *= c; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in product");
        Matrix out(a.rows_, b.cols_, a.order_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const CycloNum& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const CycloNum& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void require_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::int64_t order_ = 1;
    CycloVector data_;
};

inline Matrix matrix_power(const Matrix& m, std::int64_t k) {
    if (m.rows() != m.cols()) throw InputError("power of non-square matrix");
    Matrix result = Matrix::identity(m.rows(), m.order());
    for (std::int64_t i = 0; i < k; ++i) result = result * m;
    return result;
}

/// Bareiss elimination; the exact division by the previous pivot is a field division here.
inline CycloNum determinant(Matrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw InputError("determinant of non-square matrix");
    const std::int64_t L = m.order();
    if (n == 0) return CycloNum::one(L);
    bool negate = false;
    CycloNum prev = CycloNum::one(L);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return CycloNum::zero(L);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        const CycloNum prev_inv = inverse(prev);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                CycloNum v = m(k, k) * m(i, j);
                if (!m(i, k).is_zero() && !m(k, j).is_zero()) v -= m(i, k) * m(k, j);
                m(i, j) = v * prev_inv;
            }
            m(i, k) = CycloNum::zero(L);
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Gauss-Jordan inverse. Throws DivisionByZero on a singular matrix.
inline Matrix inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw InputError("inverse of non-square matrix");
    Matrix m = a;
    Matrix inv = Matrix::identity(n, a.order());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) throw DivisionByZero();
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(c, j), m(p, j));
                std::swap(inv(c, j), inv(p, j));
            }
        const CycloNum s = qweyl::inverse(m(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            if (!m(c, j).is_zero()) m(c, j) *= s;
            if (!inv(c, j).is_zero()) inv(c, j) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            const CycloNum f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
                if (!inv(c, j).is_zero()) inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Incremental row echelon form. Each stored row is monic at its pivot and has zeros at the
/// pivots of rows stored before it, so one forward sweep reduces a new vector completely.
class RowReducer {
public:
    explicit RowReducer(std::size_t width) : width_(width) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    /// Reduces v in place against the stored rows; returns true iff the remainder is zero.
    bool reduce(CycloVector& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const CycloNum f = v[pivots_[r]];
            if (f.is_zero()) continue;
            for (std::size_t c : support_[r]) v[c] -= f * rows_[r][c];
        }
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Adds v to the span; returns true iff it increased the rank.
    bool add(CycloVector v) {
        if (v.size() != width_) throw InputError("row width mismatch");
        if (reduce(v)) return false;
        std::size_t p = 0;
        while (v[p].is_zero()) ++p;
        const CycloNum s = inverse(v[p]);
        std::vector<std::size_t> support;
        for (std::size_t c = p; c < width_; ++c)
            if (!v[c].is_zero()) {
                v[c] *= s;
                support.push_back(c);
            }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        support_.push_back(std::move(support));
        return true;
    }

    /// Basis of the orthogonal complement {x : row . x = 0 for every stored row}.
    std::vector<CycloVector> nullspace(std::int64_t order) const {
        // Back-substitute into reduced row echelon form first.
        std::vector<CycloVector> rref = rows_;
        std::vector<std::size_t> order_idx(rows_.size());
        for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
        std::sort(order_idx.begin(), order_idx.end(),
                  [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        for (std::size_t a = order_idx.size(); a-- > 0;) {
            const std::size_t ra = order_idx[a];
            for (std::size_t b = 0; b < order_idx.size(); ++b) {
                const std::size_t rb = order_idx[b];
                if (rb == ra) continue;
                const CycloNum f = rref[rb][pivots_[ra]];
                if (f.is_zero()) continue;
                for (std::size_t c = 0; c < width_; ++c)
                    if (!rref[ra][c].is_zero()) rref[rb][c] -= f * rref[ra][c];
            }
        }
        std::vector<bool> is_pivot(width_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        std::vector<CycloVector> basis;
        for (std::size_t free = 0; free < width_; ++free) {
            if (is_pivot[free]) continue;
            CycloVector v(width_, CycloNum::zero(order));
            v[free] = CycloNum::one(order);
            for (std::size_t r = 0; r < rref.size(); ++r)
                if (!rref[r][free].is_zero()) v[pivots_[r]] = -rref[r][free];
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::size_t width_;
    std::vector<CycloVector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::size_t>> support_;
};

} // namespace qweyl
