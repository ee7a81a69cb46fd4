/**
 * @file int_matrix.hpp
 * @brief Exact integer linear algebra: Bareiss determinant, echelon spans
 * and integral LLL reduction of Gram matrices.
 */
#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "matrix.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace lamlat {

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;
using IntVector = std::vector<std::int64_t>;

inline BigMatrix to_big(const IntMatrix& m) {
    return m.map([](std::int64_t v) { return BigInt(v); });
}

/// Fraction-free Gaussian elimination with row pivoting.
inline BigInt bareiss_determinant(BigMatrix a) {
    if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline BigInt bareiss_determinant(const IntMatrix& a) { return bareiss_determinant(to_big(a)); }

/// Leading principal minors d_1..d_n of a symmetric matrix (no pivoting).
inline std::vector<BigInt> leading_minors(const IntMatrix& g) {
    std::vector<BigInt> d;
    for (std::size_t k = 1; k <= g.rows(); ++k) {
        BigMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = g(i, j);
        d.push_back(bareiss_determinant(std::move(sub)));
    }
    return d;
}

/// Incrementally maintained Hermite normal form of the Z-span of added vectors.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t dim) : dim_(dim) {}

    /// Adds a vector; returns true if the span changed.
    bool add(std::vector<BigInt> v) {
        if (v.size() != dim_) throw DimensionMismatch("echelon vector length");
        bool changed = false;
        for (std::size_t col = 0; col < dim_; ++col) {
            if (v[col] == 0) continue;
            auto it = pivot_row_.find(col);
            if (it == pivot_row_.end()) {
                if (v[col] < 0)
                    for (auto& x : v) x = -x;
                pivot_row_[col] = rows_.size();
                rows_.push_back(std::move(v));
                normalize_above(col);
                return true;
            }
            // Extended gcd combination of the pivot row and v on this column.
            auto& r = rows_[it->second];
            BigInt a = r[col], b = v[col];
            BigInt g, x, y;
            ext_gcd(a, b, g, x, y);
            if (g == a && b % a == 0) {
                const BigInt q = b / a;
                for (std::size_t j = col; j < dim_; ++j) v[j] -= q * r[j];
                continue;
            }
            const BigInt ag = a / g, bg = b / g;
            for (std::size_t j = col; j < dim_; ++j) {
                BigInt nr = x * r[j] + y * v[j];
                BigInt nv = -bg * r[j] + ag * v[j];
                r[j] = std::move(nr);
                v[j] = std::move(nv);
            }
            changed = true;
            normalize_above(col);
        }
        return changed;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

    /// Basis rows ordered by pivot column.
    std::vector<std::vector<BigInt>> basis() const {
        std::vector<std::vector<BigInt>> b;
        for (const auto& [col, idx] : pivot_row_) b.push_back(rows_[idx]);
        return b;
    }

    /// Index of the span in Z^dim when full rank (product of pivots), else 0.
    BigInt index() const {
        if (rank() != dim_) return 0;
        BigInt p = 1;
        for (const auto& [col, idx] : pivot_row_) p *= rows_[idx][col];
        return p;
    }

private:
    static void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
        BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            BigInt q = old_r / r;
            BigInt tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
            tmp = old_t - q * t;
            old_t = t;
            t = tmp;
        }
        if (old_r < 0) {
            old_r = -old_r;
            old_s = -old_s;
            old_t = -old_t;
        }
        g = old_r;
        x = old_s;
        y = old_t;
    }

    // Keeps entries above each pivot reduced into [0, pivot).
    void normalize_above(std::size_t) {
        for (const auto& [col, idx] : pivot_row_) {
            const BigInt& p = rows_[idx][col];
            for (const auto& [col2, idx2] : pivot_row_) {
                if (col2 >= col) break;
                auto& other = rows_[idx2];
                BigInt q = floor_div<BigInt>(other[col], p);
                if (q != 0)
                    for (std::size_t j = col; j < dim_; ++j) other[j] -= q * rows_[idx][j];
            }
        }
    }

    std::size_t dim_;
    std::vector<std::vector<BigInt>> rows_;
    std::map<std::size_t, std::size_t> pivot_row_;
};

struct LllResult {
    IntMatrix gram;       ///< reduced Gram U G U^T
    IntMatrix transform;  ///< unimodular U; rows are the reduced basis in old coordinates
};

/// Integral LLL on a positive definite Gram matrix (delta = 99/100).
///
/// Works entirely with the integers d_i and lambda_ij of Cohen's integral
/// variant, so no rounding error is possible. Throws NotDefinite if the
/// Gram matrix is singular or not positive definite.
inline LllResult lll_reduce_gram(const IntMatrix& g0) {
    const std::size_t n = g0.rows();
    BigMatrix g = to_big(g0);
    BigMatrix h = BigMatrix::identity(n);
    if (n == 0) return {g0, IntMatrix(0, 0)};
    // 1-based bookkeeping on d (d[0] = 1) and lambda.
    std::vector<BigInt> d(n + 1, 0);
    BigMatrix lam(n + 1, n + 1, 0);
    d[0] = 1;
    d[1] = g(0, 0);
    if (d[1] <= 0) throw NotDefinite();

    auto row_sub = [&](std::size_t k, std::size_t l, const BigInt& q) {  // b_k -= q b_l (0-based)
        for (std::size_t j = 0; j < n; ++j) h(k, j) -= q * h(l, j);
        for (std::size_t j = 0; j < n; ++j) g(k, j) -= q * g(l, j);
        g(k, k) -= q * g(k, l);
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) g(j, k) = g(k, j);
    };
    auto red = [&](std::size_t k, std::size_t l) {
        if (2 * abs(lam(k, l)) > d[l]) {
            BigInt q = floor_div<BigInt>(2 * lam(k, l) + d[l], 2 * d[l]);
            row_sub(k - 1, l - 1, q);
            lam(k, l) -= q * d[l];
            for (std::size_t i = 1; i < l; ++i) lam(k, i) -= q * lam(l, i);
        }
    };
    auto swap_rows = [&](std::size_t k, std::size_t kmax) {
        const std::size_t a = k - 1, b = k - 2;  // 0-based indices of b_k and b_{k-1}
        for (std::size_t j = 0; j < n; ++j) std::swap(h(a, j), h(b, j));
        for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
        for (std::size_t j = 0; j < n; ++j) std::swap(g(j, a), g(j, b));
        for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam(k, j), lam(k - 1, j));
        const BigInt l = lam(k, k - 1);
        const BigInt bnew = (d[k - 2] * d[k] + l * l) / d[k - 1];
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            const BigInt t = lam(i, k);
            lam(i, k) = (d[k] * lam(i, k - 1) - l * t) / d[k - 1];
            lam(i, k - 1) = (bnew * t + l * lam(i, k)) / d[k];
        }
        d[k - 1] = bnew;
    };

    std::size_t k = 2, kmax = 1;
    while (k <= n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 1; j <= k; ++j) {
                BigInt u = g(k - 1, j - 1);
                for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam(k, i) * lam(j, i)) / d[i - 1];
                if (j < k)
                    lam(k, j) = u;
                else {
                    if (u <= 0) throw NotDefinite();
                    d[k] = u;
                }
            }
        }
        red(k, k - 1);
        if (100 * d[k] * d[k - 2] < 99 * d[k - 1] * d[k - 1] - 100 * lam(k, k - 1) * lam(k, k - 1)) {
            swap_rows(k, kmax);
            if (k > 2) --k;
        } else {
            for (std::size_t l = k - 1; l-- > 1;) red(k, l);
            ++k;
        }
    }
    if (n == 1 && d[1] <= 0) throw NotDefinite();
    LllResult r{IntMatrix(n, n), IntMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r.gram(i, j) = to_int64(g(i, j));
            r.transform(i, j) = to_int64(h(i, j));
        }
    return r;
}

}  // namespace lamlat
