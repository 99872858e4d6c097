#pragma once

/**
 * @file matrix.hpp
 * @brief Dense square matrices over an exact commutative ring, with the
 * division-free characteristic polynomial (Berkowitz) used as the eigenvalue oracle.
 */

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutglue {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw std::invalid_argument("Matrix: rows must form a square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(std::span<const T> entries) {
        Matrix m(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const T> entries() const { return data_; }

    Matrix transpose() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T s(0);
        for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        check_same(a, b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        check_same(a, b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& e : a.data_) e = s * e;
        return a;
    }

    friend std::vector<T> operator*(const Matrix& a, std::span<const T> x) {
        if (x.size() != a.n_) throw std::invalid_argument("Matrix * vector: dimension mismatch");
        std::vector<T> y(a.n_, T(0));
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t j = 0; j < a.n_; ++j) y[i] += a(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.n_) + " vs " +
                                        std::to_string(b.n_));
    }

    std::size_t n_ = 0;
    std::vector<T> data_;
};

/// Outer product x y^T.
template <typename T>
Matrix<T> outer(std::span<const T> x, std::span<const T> y) {
    if (x.size() != y.size()) throw std::invalid_argument("outer: dimension mismatch");
    Matrix<T> m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
    return m;
}

/**
 * Characteristic polynomial det(t I - A) by Berkowitz's algorithm.
 *
 * Uses only ring operations, so it is exact over any commutative ring.
 * Coefficients are returned lowest degree first: c[0] + c[1] t + ... + c[n] t^n, c[n] = 1.
 */
template <typename T>
std::vector<T> characteristic_polynomial(const Matrix<T>& a) {
    const std::size_t n = a.size();
    // vect holds the coefficients (highest degree first) of the char poly of the
    // leading r x r principal submatrix.
    std::vector<T> vect{T(1)};
    if (n == 0) return vect;
    vect.push_back(-a(0, 0));
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C
        std::vector<T> col(r + 2, T(0));
        col[0] = T(1);
        col[1] = -a(r, r);
        std::vector<T> c(r);
        for (std::size_t i = 0; i < r; ++i) c[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            T s(0);
            for (std::size_t j = 0; j < r; ++j) s += a(r, j) * c[j];
            col[k + 2] = -s;
            if (k + 1 < r) {
                std::vector<T> next(r, T(0));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * c[j];
                c = std::move(next);
            }
        }
        std::vector<T> out(r + 2, T(0));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < vect.size(); ++j) out[i] += col[i - j] * vect[j];
        vect = std::move(out);
    }
    return {vect.rbegin(), vect.rend()};
}

/// det(A) = (-1)^n times the constant term of the characteristic polynomial.
template <typename T>
T determinant(const Matrix<T>& a) {
    T c0 = characteristic_polynomial(a).front();
    return a.size() % 2 == 0 ? c0 : T(-c0);
}

} // namespace cutglue
