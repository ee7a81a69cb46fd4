/**
 * @file matrix.hpp
 * @brief Minimal dense row-major matrix over an arbitrary ring.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lamlat {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix r(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

/// Division-free determinant by cofactor expansion over column subsets.
///
/// Runs in O(n 2^n) ring operations, so it works over any commutative ring
/// without exact division; intended for n up to about 12.
template <class T>
T subset_determinant(const Matrix<T>& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    if (n > 20) throw std::invalid_argument("subset_determinant limited to n <= 20");
    // minors[S] = det of rows 0..|S|-1 against columns in S (ascending).
    std::vector<T> minors(std::size_t{1} << n, T(0));
    minors[0] = T(1);
    for (std::size_t s = 1; s < minors.size(); ++s) {
        const auto k = static_cast<std::size_t>(__builtin_popcountll(s));
        const std::size_t row = k - 1;
        T acc(0);
        int position = 0;  // index of column j within S (from the low end)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(s >> j & 1)) continue;
            const std::size_t rest = s & ~(std::size_t{1} << j);
            // Row `row` is last; expanding along it, column j has sign (-1)^(row + position).
            if (!(a(row, j) == T(0)) && !(minors[rest] == T(0))) {
                T term = a(row, j) * minors[rest];
                if ((row + static_cast<std::size_t>(position)) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++position;
        }
        minors[s] = acc;
    }
    return minors.back();
}

template <class T>
Matrix<T> minor_matrix(const Matrix<T>& a, std::size_t skip_row, std::size_t skip_col) {
    Matrix<T> m(a.rows() - 1, a.cols() - 1);
    for (std::size_t i = 0, r = 0; i < a.rows(); ++i) {
        if (i == skip_row) continue;
        for (std::size_t j = 0, c = 0; j < a.cols(); ++j) {
            if (j == skip_col) continue;
            m(r, c++) = a(i, j);
        }
        ++r;
    }
    return m;
}

/// Adjugate, so that a * adjugate(a) = det(a) * I.
template <class T>
Matrix<T> adjugate(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    Matrix<T> adj(n, n, T(0));
    if (n == 1) {
        adj(0, 0) = T(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            T c = subset_determinant(minor_matrix(a, i, j));
            adj(j, i) = ((i + j) % 2 == 0) ? c : T(0) - c;
        }
    return adj;
}

}  // namespace lamlat
