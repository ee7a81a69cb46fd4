/**
 * @file enumeration.hpp
 * @brief Exact Fincke-Pohst enumeration with integer-only pruning.
 *
 * For a positive definite Gram matrix G let d_k be its k-th leading
 * principal minor and beta_kj the k-th row of the fraction-free (Bareiss)
 * elimination of G. Then
 *
 *     Q(x) = sum_k s_k^2 / (d_k d_{k+1}),   s_k = d_{k+1} x_k + sum_{j>k} beta_kj x_j,
 *
 * and the scaled partial norm I_k = d_k * sum_{i>=k} s_i^2/(d_i d_{i+1}) is
 * an integer obeying I_k = (d_k I_{k+1} + s_k^2) / d_{k+1} exactly. The
 * search descends from the last coordinate, allowing x_k exactly when
 * s_k^2 <= d_k (N d_{k+1} - I_{k+1}); at the leaf I_0 = Q(x).
 */
#pragma once

#include "bigint.hpp"
#include "errors.hpp"
#include "int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace lamlat {

template <class Int>
class ExactEnumerator {
public:
    ExactEnumerator(const std::vector<BigInt>& minors, const BigMatrix& beta) : n_(minors.size() - 1) {
        d_.reserve(minors.size());
        for (const auto& m : minors) d_.push_back(convert(m));
        beta_.assign(n_ * n_, Int(0));
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t j = k + 1; j < n_; ++j) beta_[k * n_ + j] = convert(beta(k, j));
        x_.assign(n_, 0);
    }

    std::size_t dim() const { return n_; }

    /// Values the last coordinate can take.
    std::vector<std::int64_t> top_values(std::int64_t bound, bool symmetric) const {
        std::vector<std::int64_t> v;
        if (n_ == 0) return v;
        const std::size_t k = n_ - 1;
        const Int r = isqrt(Int(d_[k] * (Int(bound) * d_[k + 1])));
        std::int64_t lo = to_int64(ceil_div<Int>(-r, d_[k + 1]));
        const std::int64_t hi = to_int64(floor_div<Int>(r, d_[k + 1]));
        if (symmetric) lo = std::max<std::int64_t>(lo, 0);
        for (std::int64_t x = lo; x <= hi; ++x) v.push_back(x);
        return v;
    }

    /// Visits every x with Q(x) <= bound and (optionally) last coordinate fixed.
    /// `visit(x, norm, bound)` may lower `bound` to prune the rest of the search.
    /// In symmetric mode only x whose last nonzero coordinate is positive are
    /// visited and x = 0 is skipped.
    template <class Visit>
    void run(std::int64_t& bound, std::optional<std::int64_t> fixed_top, bool symmetric, Visit&& visit) {
        if (n_ == 0) return;
        bound_ = &bound;
        recurse(n_ - 1, Int(0), true, fixed_top, symmetric, visit);
    }

private:
    static Int convert(const BigInt& v) {
        if constexpr (std::is_same_v<Int, BigInt>) {
            return v;
        } else {
            // Caller guarantees the range; go through two 64-bit halves.
            const bool neg = v < 0;
            BigInt mag = neg ? BigInt(-v) : v;
            const auto lo = static_cast<std::uint64_t>(mag & BigInt(0xFFFFFFFFFFFFFFFFull));
            const auto hi = static_cast<std::uint64_t>(mag >> 64);
            auto u = (static_cast<unsigned __int128>(hi) << 64) | lo;
            return neg ? -static_cast<Int>(u) : static_cast<Int>(u);
        }
    }

    template <class Visit>
    void recurse(std::size_t k, const Int& i_next, bool zero_above, std::optional<std::int64_t> fixed_top,
                 bool symmetric, Visit& visit) {
        Int sigma = 0;
        for (std::size_t j = k + 1; j < n_; ++j)
            if (x_[j] != 0) sigma += beta_[k * n_ + j] * Int(x_[j]);
        const Int& dk = d_[k];
        const Int& dk1 = d_[k + 1];
        const Int room = dk * (Int(*bound_) * dk1 - i_next);
        if (room < 0) return;
        const Int r = isqrt(room);
        std::int64_t lo = to_int64(ceil_div<Int>(-r - sigma, dk1));
        std::int64_t hi = to_int64(floor_div<Int>(r - sigma, dk1));
        if (k == n_ - 1 && fixed_top) {
            lo = std::max(lo, *fixed_top);
            hi = std::min(hi, *fixed_top);
        }
        if (symmetric && zero_above) lo = std::max<std::int64_t>(lo, 0);
        for (std::int64_t xk = lo; xk <= hi; ++xk) {
            const Int s = dk1 * Int(xk) + sigma;
            const Int ik = (dk * i_next + s * s) / dk1;
            if (ik > Int(*bound_) * dk) continue;  // bound may have been tightened
            x_[k] = xk;
            if (k == 0) {
                if (!(symmetric && zero_above && xk == 0)) {
                    std::int64_t norm = to_int64(ik);
                    visit(static_cast<const std::vector<std::int64_t>&>(x_), norm, *bound_);
                }
            } else {
                recurse(k - 1, ik, zero_above && xk == 0, fixed_top, symmetric, visit);
            }
        }
        x_[k] = 0;
    }

    std::size_t n_;
    std::vector<Int> d_;
    std::vector<Int> beta_;
    std::vector<std::int64_t> x_;
    std::int64_t* bound_ = nullptr;
};

/// Fincke-Pohst search over a positive definite Gram matrix, choosing 128-bit
/// or arbitrary-precision arithmetic from rigorous magnitude bounds.
class ShortVectorSearch {
public:
    ShortVectorSearch(const IntMatrix& gram, std::int64_t max_bound) {
        const std::size_t n = gram.rows();
        if (!gram.is_square()) throw DimensionMismatch("Gram matrix must be square");
        // Bareiss rows give d_k (diagonal) and beta_kj.
        BigMatrix m = to_big(gram);
        BigMatrix beta(n, n, 0);
        std::vector<BigInt> minors{1};
        BigInt prev = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (m(k, k) <= 0) throw NotDefinite();
            for (std::size_t j = k; j < n; ++j) beta(k, j) = m(k, j);
            minors.push_back(m(k, k));
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            prev = m(k, k);
        }
        if (fits_int128(gram, minors, beta, max_bound))
            impl_.emplace<ExactEnumerator<Int128>>(minors, beta);
        else
            impl_.emplace<ExactEnumerator<BigInt>>(minors, beta);
    }

    bool uses_bigint() const { return std::holds_alternative<ExactEnumerator<BigInt>>(impl_); }

    std::vector<std::int64_t> top_values(std::int64_t bound, bool symmetric) const {
        return std::visit([&](const auto& e) { return e.top_values(bound, symmetric); }, impl_);
    }

    template <class Visit>
    void run(std::int64_t& bound, std::optional<std::int64_t> fixed_top, bool symmetric, Visit&& visit) {
        std::visit([&](auto& e) { e.run(bound, fixed_top, symmetric, visit); }, impl_);
    }

private:
    static bool fits_int128(const IntMatrix& gram, const std::vector<BigInt>& d, const BigMatrix& beta,
                            std::int64_t bound) {
        const std::size_t n = gram.rows();
        const BigInt limit = BigInt(1) << 120;
        const BigInt det = d.back();
        // |x_j|^2 <= bound * (G^-1)_jj = bound * adj_jj / det.
        std::vector<BigInt> xmax(n);
        for (std::size_t j = 0; j < n; ++j) {
            BigInt adj = n == 1 ? BigInt(1) : bareiss_determinant(minor_matrix(to_big(gram), j, j));
            xmax[j] = isqrt(BigInt(bound) * adj / det) + 1;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (d[k] * d[k + 1] * (BigInt(bound) + 1) * 4 > limit) return false;
            BigInt sigma = d[k + 1] * xmax[k];
            for (std::size_t j = k + 1; j < n; ++j) sigma += abs(beta(k, j)) * xmax[j];
            if (sigma * 4 > limit) return false;
        }
        return true;
    }

    std::variant<ExactEnumerator<Int128>, ExactEnumerator<BigInt>> impl_{std::in_place_index<0>,
                                                                          std::vector<BigInt>{1}, BigMatrix()};
};

}  // namespace lamlat
