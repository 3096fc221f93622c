#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/gaussian_rational.hpp"

namespace witt {

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw dimension_error("entry count " + std::to_string(data_.size()) + " does not match " +
                                  std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    // Row-wise literal, e.g. ExactMatrix::from_rows({{1, 0}, {0, 1}}).
    static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        ExactMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw dimension_error("ragged matrix literal");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static ExactMatrix column(std::vector<Scalar> entries) {
        const std::size_t n = entries.size();
        return {n, 1, std::move(entries)};
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<Scalar>& entries() const { return data_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Scalar trace() const {
        if (!is_square()) throw dimension_error("trace of a non-square matrix");
        Scalar t;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    ExactMatrix column_at(std::size_t c) const {
        ExactMatrix v(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, c);
        return v;
    }

    ExactMatrix& operator+=(const ExactMatrix& o) {
        require_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    ExactMatrix& operator-=(const ExactMatrix& o) {
        require_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    ExactMatrix& operator*=(const Scalar& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const Scalar& s) { return a *= s; }
    friend ExactMatrix operator*(const Scalar& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const ExactMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_error(std::string("shape mismatch in matrix ") + op);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                              " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

/// Reduced row-echelon form with leftmost pivots normalised to 1.
struct RowEchelon {
    ExactMatrix reduced;
    std::vector<std::size_t> pivot_cols;  // pivot column of row k, ascending
};

inline RowEchelon rref(ExactMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const Scalar inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).pivot_cols.size(); }

/// Basis of {x : A x = 0}: one column vector per free column of rref(A), in
/// ascending column order, with that free variable set to 1 and the others to 0.
inline std::vector<ExactMatrix> nullspace(const ExactMatrix& a) {
    const RowEchelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivot_cols) is_pivot[p] = true;

    std::vector<ExactMatrix> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        ExactMatrix x(a.cols(), 1);
        x(free, 0) = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x(e.pivot_cols[r], 0) = -e.reduced(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

inline std::optional<ExactMatrix> try_inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw dimension_error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const RowEchelon e = rref(std::move(aug));
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
    ExactMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

inline ExactMatrix inverse(const ExactMatrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw domain_error("matrix is singular");
    return *std::move(inv);
}

/// Columns placed side by side; all must have the same row count.
inline ExactMatrix hstack(const std::vector<ExactMatrix>& blocks) {
    if (blocks.empty()) return {};
    const std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw dimension_error("hstack row mismatch");
        cols += b.cols();
    }
    ExactMatrix out(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
        off += b.cols();
    }
    return out;
}

// Matrix flattened row-major into a single column.
inline ExactMatrix vectorize(const ExactMatrix& m) { return ExactMatrix::column(m.entries()); }

inline ExactMatrix unvectorize(const ExactMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols) throw dimension_error("unvectorize shape mismatch");
    return {rows, cols, v.entries()};
}

} // namespace witt
