#pragma once

#include "hecke/rational_function.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hecke {

// Thrown by invert() on a singular matrix.
struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("singular matrix") {}
};

// Dense row-major matrix over an exact field T (RationalFunction or mpq_class).
template <class T>
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}

    static FieldMatrix identity(size_t n) {
        FieldMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static FieldMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        size_t c = rows.empty() ? 0 : rows[0].size();
        FieldMatrix m(rows.size(), c);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    std::vector<T> row(size_t i) const { return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

    FieldMatrix transpose() const {
        FieldMatrix t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
        FieldMatrix m(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (size_t j = 0; j < b.c_; ++j)
                    if (!is_zero(b(k, j))) m(i, j) += x * b(k, j);
            }
        return m;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != c_) throw std::invalid_argument("vector length mismatch");
        std::vector<T> y(r_, T(0));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j)
                if (!is_zero((*this)(i, j)) && !is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    bool is_symmetric() const {
        if (r_ != c_) return false;
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = i + 1; j < c_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    // Reduced row echelon form in place; returns pivot columns. The pivot in
    // each column is the first nonzero entry at or below the current row.
    std::vector<size_t> rref() {
        std::vector<size_t> piv;
        size_t row = 0;
        for (size_t col = 0; col < c_ && row < r_; ++col) {
            size_t p = row;
            while (p < r_ && is_zero((*this)(p, col))) ++p;
            if (p == r_) continue;
            if (p != row)
                for (size_t j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
            T inv = T(1) / (*this)(row, col);
            for (size_t j = col; j < c_; ++j)
                if (!is_zero((*this)(row, j))) (*this)(row, j) *= inv;
            for (size_t i = 0; i < r_; ++i) {
                if (i == row || is_zero((*this)(i, col))) continue;
                T f = (*this)(i, col);
                for (size_t j = col; j < c_; ++j)
                    if (!is_zero((*this)(row, j))) (*this)(i, j) -= f * (*this)(row, j);
            }
            piv.push_back(col);
            ++row;
        }
        return piv;
    }

    size_t rank() const {
        FieldMatrix m = *this;
        return m.rref().size();
    }

    // Basis of the right kernel read off the reduced echelon form: one vector
    // per free column, with 1 in that column.
    std::vector<std::vector<T>> kernel() const {
        FieldMatrix m = *this;
        std::vector<size_t> piv = m.rref();
        std::vector<bool> is_piv(c_, false);
        for (size_t p : piv) is_piv[p] = true;
        std::vector<std::vector<T>> basis;
        for (size_t f = 0; f < c_; ++f) {
            if (is_piv[f]) continue;
            std::vector<T> v(c_, T(0));
            v[f] = T(1);
            for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m(k, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // One solution of m x = b, or nullopt if the system is inconsistent.
    std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
        if (b.size() != r_) throw std::invalid_argument("right-hand side length mismatch");
        FieldMatrix aug(r_, c_ + 1);
        for (size_t i = 0; i < r_; ++i) {
            for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_) = b[i];
        }
        std::vector<size_t> piv = aug.rref();
        if (!piv.empty() && piv.back() == c_) return std::nullopt;
        std::vector<T> x(c_, T(0));
        for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, c_);
        return x;
    }

    FieldMatrix inverse() const {
        if (r_ != c_) throw std::invalid_argument("inverse of a non-square matrix");
        size_t n = r_;
        FieldMatrix aug(n, 2 * n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = T(1);
        }
        std::vector<size_t> piv = aug.rref();
        if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix();
        FieldMatrix inv(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
        return inv;
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using RFMatrix = FieldMatrix<RationalFunction>;
using QMatrix = FieldMatrix<mpq_class>;

}  // namespace hecke
