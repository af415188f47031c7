#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "bw/rat.hpp"

namespace bw {

/* Dense row-major matrix over an arbitrary commutative scalar. */
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<T>::zero()) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix& operator+=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    /* fused this += m * s, the hot accumulation in operator assembly */
    void add_scaled(const Matrix& m, const T& s) {
        assert(rows_ == m.rows_ && cols_ == m.cols_);
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += m.data_[i] * s;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T s = scalar_traits<T>::zero();
        for (size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
        return s;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == T(0))) return false;
        return true;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& x : data_) {
            double a = scalar_traits<T>::abs_value(x);
            if (a > m) m = a;
        }
        return m;
    }

    const std::vector<T>& data() const { return data_; }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

/* Determinant by fraction-free-ish Gaussian elimination; exact for Rat. */
template <class T>
T determinant(Matrix<T> m) {
    assert(m.rows() == m.cols());
    size_t n = m.rows();
    T det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c) == T(0)) ++p;
        if (p == n) return T(0);
        if (p != c) {
            for (size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == T(0)) continue;
            T f = m(r, c) / m(c, c);
            for (size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

/* Row rank over an exact field. */
template <class T>
size_t rank_exact(Matrix<T> m) {
    size_t n = m.rows(), w = m.cols(), rank = 0;
    for (size_t c = 0; c < w && rank < n; ++c) {
        size_t p = rank;
        while (p < n && m(p, c) == T(0)) ++p;
        if (p == n) continue;
        for (size_t j = 0; j < w; ++j) std::swap(m(p, j), m(rank, j));
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || m(r, c) == T(0)) continue;
            T f = m(r, c) / m(rank, c);
            for (size_t j = 0; j < w; ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/* Numerical row rank via elimination with full pivoting on |.|. */
template <class T>
size_t rank_numeric(Matrix<T> m, double tol) {
    size_t n = m.rows(), w = m.cols(), rank = 0;
    double scale = m.max_abs();
    if (scale == 0) return 0;
    for (size_t c = 0; c < w && rank < n; ++c) {
        size_t p = rank;
        double best = 0;
        for (size_t r = rank; r < n; ++r) {
            double a = scalar_traits<T>::abs_value(m(r, c));
            if (a > best) {
                best = a;
                p = r;
            }
        }
        if (best <= tol * scale) continue;
        for (size_t j = 0; j < w; ++j) std::swap(m(p, j), m(rank, j));
        for (size_t r = 0; r < n; ++r) {
            if (r == rank) continue;
            T f = m(r, c) / m(rank, c);
            for (size_t j = 0; j < w; ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/* Characteristic polynomial of an exact square matrix via the
 * Faddeev–LeVerrier recurrence; returned with leading coefficient 1,
 * constant term first. */
inline std::vector<Rat> charpoly(const Matrix<Rat>& a) {
    size_t n = a.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = Rat(1);
    Matrix<Rat> m = Matrix<Rat>::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        m = a * m;
        Rat ck = -m.trace() / Rat(static_cast<long>(k));
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    return c;
}

}  // namespace bw
