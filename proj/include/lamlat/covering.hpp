/**
 * @file covering.hpp
 * @brief Integral lattices of finite cyclic covers and finite windows of
 * the infinite cyclic cover, and minimal lifts through the double cover.
 *
 * Reduction basis: the Z-basis vector t^j x_i (0 <= j < m) of the m-fold
 * cover sits at row i*m + j (0-based).
 */
#pragma once

#include "herm_form.hpp"
#include "zlattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lamlat {

inline std::size_t reduction_index(std::size_t m, std::size_t i, std::size_t j) { return i * m + j; }

inline IntegralLattice reduce_mod_m(const HermitianForm& a, int m) {
    if (m < 1) throw std::invalid_argument("fold count m must be positive");
    const std::size_t n = a.rank(), mm = static_cast<std::size_t>(m);
    IntMatrix g(n * mm, n * mm, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<std::int64_t> wrapped(mm);
            for (int r = 0; r < m; ++r) wrapped[static_cast<std::size_t>(r)] = to_int64(a(i, k).coeff_wrap(m, r));
            for (std::size_t j = 0; j < mm; ++j)
                for (std::size_t l = 0; l < mm; ++l)
                    g(reduction_index(mm, i, j), reduction_index(mm, k, l)) = wrapped[(j + mm - l) % mm];
        }
    return IntegralLattice::validate(std::move(g));
}

/// Span of t^j x_i for |j| <= J; row index i*(2J+1) + (j+J).
inline IntegralLattice window_gram(const HermitianForm& a, int window) {
    if (window < 0) throw std::invalid_argument("window half-width must be non-negative");
    const std::size_t n = a.rank(), w = static_cast<std::size_t>(2 * window + 1);
    IntMatrix g(n * w, n * w, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (int j = -window; j <= window; ++j)
                for (int l = -window; l <= window; ++l)
                    g(i * w + static_cast<std::size_t>(j + window), k * w + static_cast<std::size_t>(l + window)) =
                        to_int64(a(i, k).coeff(j - l));
    return IntegralLattice::validate(std::move(g));
}

/// Image of a Λ-vector in the m-fold cover.
inline IntVector reduce_vector(const LambdaVector& v, int m) {
    if (m < 1) throw std::invalid_argument("fold count m must be positive");
    const std::size_t mm = static_cast<std::size_t>(m);
    IntVector x(v.size() * mm, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (const auto& [d, c] : v[i].terms()) {
            int r = d % m;
            if (r < 0) r += m;
            x[reduction_index(mm, i, static_cast<std::size_t>(r))] += to_int64(c);
        }
    return x;
}

/// Window coordinates of a Λ-vector whose degrees lie in [-J, J].
inline std::optional<IntVector> window_vector(const LambdaVector& v, int window) {
    const std::size_t w = static_cast<std::size_t>(2 * window + 1);
    IntVector x(v.size() * w, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (const auto& [d, c] : v[i].terms()) {
            if (d < -window || d > window) return std::nullopt;
            x[i * w + static_cast<std::size_t>(d + window)] = to_int64(c);
        }
    return x;
}

/// Λ-vector with the given window coordinates.
inline LambdaVector from_window_vector(const IntVector& x, std::size_t n, int window) {
    const std::size_t w = static_cast<std::size_t>(2 * window + 1);
    LambdaVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j) v[i].add_term(static_cast<int>(j) - window, x[i * w + j]);
    return v;
}

/// The covering projection from level 2m to level m: (i, j) -> (i, j mod m).
inline IntVector project_double(const IntVector& x, std::size_t n, int m) {
    const std::size_t mm = static_cast<std::size_t>(m);
    if (x.size() != 2 * mm * n) throw DimensionMismatch("vector is not at level 2m");
    IntVector y(n * mm, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 2 * mm; ++j) y[reduction_index(mm, i, j % mm)] += x[reduction_index(2 * mm, i, j)];
    return y;
}

/// Lift placing the coordinate of (i, j) at (i, j) of level 2m.
inline IntVector canonical_lift(const IntVector& v, std::size_t n, int m) {
    const std::size_t mm = static_cast<std::size_t>(m);
    if (v.size() != mm * n) throw DimensionMismatch("vector is not at level m");
    IntVector x(2 * mm * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < mm; ++j) x[reduction_index(2 * mm, i, j)] = v[reduction_index(mm, i, j)];
    return x;
}

/// Basis t^j x_i - t^(j+m) x_i of the kernel of the projection, in level-2m coordinates.
inline std::vector<IntVector> lift_kernel_basis(std::size_t n, int m) {
    const std::size_t mm = static_cast<std::size_t>(m);
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < mm; ++j) {
            IntVector k(2 * mm * n, 0);
            k[reduction_index(2 * mm, i, j)] = 1;
            k[reduction_index(2 * mm, i, j + mm)] = -1;
            basis.push_back(std::move(k));
        }
    return basis;
}

struct LiftResult {
    std::int64_t min_norm = 0;
    IntVector witness;  ///< level-2m coordinates; lexicographically smallest among minimizers
};

namespace detail {

/// Coset p^-1(v) as an affine lattice w + K, reduced and embedded as the
/// lattice spanned by a reduced basis of K and w (placed last).
struct LiftCoset {
    IntegralLattice level2;
    IntVector base;                    // canonical lift w
    std::vector<IntVector> generators; // LLL-reduced kernel basis followed by w
    IntMatrix embedded;                // their Gram matrix

    LiftCoset(const HermitianForm& a, int m, const IntVector& v)
        : level2(reduce_mod_m(a, 2 * m)), base(canonical_lift(v, a.rank(), m)) {
        const auto kernel = lift_kernel_basis(a.rank(), m);
        const IntegralLattice klat = level2.sublattice(kernel);
        const LllResult red = reduced_presentation(klat);
        for (std::size_t r = 0; r < kernel.size(); ++r) {
            IntVector g(base.size(), 0);
            for (std::size_t k = 0; k < kernel.size(); ++k)
                if (red.transform(r, k) != 0)
                    for (std::size_t c = 0; c < g.size(); ++c) g[c] += red.transform(r, k) * kernel[k][c];
            generators.push_back(std::move(g));
        }
        generators.push_back(base);
        embedded = level2.sublattice(generators).gram();
    }

    IntVector combine(const IntVector& y) const {
        IntVector x(base.size(), 0);
        for (std::size_t k = 0; k < generators.size(); ++k)
            if (y[k] != 0)
                for (std::size_t c = 0; c < x.size(); ++c) x[c] += y[k] * generators[k][c];
        return x;
    }
};

}  // namespace detail

/// Minimum of |x'|^2 over all level-2m lifts x' of v, solved exactly as a
/// closest-vector problem over the kernel lattice by branch and bound.
inline LiftResult lift_min_norm(const HermitianForm& a, int m, const IntVector& v) {
    if (v.size() != a.rank() * static_cast<std::size_t>(m)) throw DimensionMismatch("vector is not at level m");
    LiftResult res;
    const bool zero = std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
    if (zero) {
        require_definite(reduce_mod_m(a, 2 * m));
        res.witness.assign(2 * v.size(), 0);
        return res;
    }
    const detail::LiftCoset coset(a, m, v);
    std::int64_t bound = coset.level2.norm(coset.base);
    ShortVectorSearch search(coset.embedded, bound);
    std::optional<IntVector> best;
    std::int64_t best_norm = bound;
    search.run(bound, std::int64_t{1}, false, [&](const IntVector& y, std::int64_t norm, std::int64_t& b) {
        IntVector x = coset.combine(y);
        if (!best || norm < best_norm || (norm == best_norm && x < *best)) {
            best = std::move(x);
            best_norm = norm;
            b = norm;
        }
    });
    res.min_norm = best_norm;
    res.witness = std::move(*best);
    return res;
}

/// Every lift of v with norm <= bound, sorted by (norm, coords).
inline std::vector<ShortVector> enumerate_lifts(const HermitianForm& a, int m, const IntVector& v, std::int64_t bound) {
    std::vector<ShortVector> out;
    const bool zero = std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
    if (zero) {
        const auto kernel = lift_kernel_basis(a.rank(), m);
        const IntegralLattice level2 = reduce_mod_m(a, 2 * m);
        out.push_back({IntVector(2 * v.size(), 0), 0});
        for (const auto& k : enumerate_up_to(level2.sublattice(kernel), bound).vectors) {
            IntVector x(2 * v.size(), 0);
            for (std::size_t r = 0; r < kernel.size(); ++r)
                for (std::size_t c = 0; c < x.size(); ++c) x[c] += k.coords[r] * kernel[r][c];
            IntVector neg = x;
            for (auto& c : neg) c = -c;
            out.push_back({std::move(x), k.norm});
            out.push_back({std::move(neg), k.norm});
        }
    } else {
        const detail::LiftCoset coset(a, m, v);
        std::int64_t b = bound;
        ShortVectorSearch search(coset.embedded, std::max(bound, std::int64_t{1}));
        search.run(b, std::int64_t{1}, false,
                   [&](const IntVector& y, std::int64_t norm, std::int64_t&) { out.push_back({coset.combine(y), norm}); });
    }
    std::sort(out.begin(), out.end(), [](const ShortVector& x, const ShortVector& y) {
        return x.norm != y.norm ? x.norm < y.norm : x.coords < y.coords;
    });
    return out;
}

}  // namespace lamlat
