// Brute-force reference implementations and random generators shared by the tests.
#pragma once

#include "lamlat.hpp"

#include <cmath>
#include <random>
#include <set>

namespace oracle {

using namespace lamlat;

inline std::int64_t norm(const IntMatrix& g, const IntVector& x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * g(i, j) * x[j];
    return s;
}

/// Calls visit on every integer vector in the box |x_i| <= r_i.
template <class Visit>
void box(const std::vector<std::int64_t>& r, Visit&& visit) {
    IntVector x(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) x[i] = -r[i];
    for (;;) {
        visit(x);
        std::size_t k = 0;
        while (k < x.size() && x[k] == r[k]) {
            x[k] = -r[k];
            ++k;
        }
        if (k == x.size()) return;
        ++x[k];
    }
}

/// |x_i|^2 <= bound * (G^-1)_ii, bounded from above via cofactor / det in doubles plus slack.
inline std::vector<std::int64_t> box_radii(const IntMatrix& g, std::int64_t bound) {
    const std::size_t n = g.rows();
    const double det = static_cast<double>(bareiss_determinant(g));
    std::vector<std::int64_t> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t a = 0, ra = 0; a < n; ++a) {
            if (a == i) continue;
            for (std::size_t b = 0, rb = 0; b < n; ++b) {
                if (b == i) continue;
                minor(ra, rb++) = g(a, b);
            }
            ++ra;
        }
        const double cof = n == 1 ? 1.0 : static_cast<double>(bareiss_determinant(minor));
        r[i] = static_cast<std::int64_t>(std::floor(std::sqrt(bound * cof / det))) + 1;
    }
    return r;
}

/// Sorted nonzero vectors of norm <= bound with first nonzero coordinate positive.
inline std::vector<ShortVector> short_vectors(const IntMatrix& g, std::int64_t bound) {
    std::vector<ShortVector> out;
    box(box_radii(g, bound), [&](const IntVector& x) {
        const auto first = std::find_if(x.begin(), x.end(), [](std::int64_t c) { return c != 0; });
        if (first == x.end() || *first < 0) return;
        const std::int64_t nx = norm(g, x);
        if (nx <= bound) out.push_back({x, nx});
    });
    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        return a.norm != b.norm ? a.norm < b.norm : a.coords < b.coords;
    });
    return out;
}

/// Minimal means x is not y + z with both strictly shorter.
inline bool minimal(const IntMatrix& g, const IntVector& x) {
    const std::int64_t nx = norm(g, x);
    bool split = false;
    box(box_radii(g, nx), [&](const IntVector& y) {
        if (split) return;
        if (norm(g, y) >= nx) return;
        IntVector z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
        if (norm(g, z) < nx) split = true;
    });
    return !split;
}

/// Random positive definite symmetric Gram (rejection sampling).
inline IntMatrix random_definite(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    for (;;) {
        IntMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = d(rng);
        if (is_positive_definite(IntegralLattice::validate(g))) return g;
    }
}

/// Random nonsingular Gram B B^T with entries of B in [-2, 2].
inline IntMatrix random_gram(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-2, 2);
    for (;;) {
        IntMatrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = d(rng);
        if (bareiss_determinant(b) != 0) return b * b.transposed();
    }
}

/// Random integer matrix of determinant +-1: product of elementary row operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
    IntMatrix p = IntMatrix::identity(n);
    if (n == 1) return p;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> c(-1, 1);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const int k = c(rng);
        for (std::size_t col = 0; col < n; ++col) p(i, col) += k * p(j, col);
    }
    for (std::size_t col = 0; col < n; ++col) p(0, col) = -p(0, col);
    return p;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int lo, int hi, int cmax) {
    std::uniform_int_distribution<int> c(-cmax, cmax);
    LaurentPoly p;
    for (int d = lo; d <= hi; ++d) p.add_term(d, c(rng));
    return p;
}

/// Random unimodular Lambda-matrix: unitriangular factors with small entries, a row swap and unit diagonal.
inline PolyMatrix random_unimodular_lambda(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> deg(-1, 1), sgn(0, 1);
    PolyMatrix lower = PolyMatrix::identity(n), upper = PolyMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const int a = deg(rng);
            lower(i, j) = random_poly(rng, a, a + 1, 1);
            upper(j, i) = random_poly(rng, 0, 0, 1);
        }
    PolyMatrix c = lower * upper;
    for (std::size_t i = 0; i < n; ++i) {
        const LaurentPoly u = LaurentPoly::monomial(deg(rng), sgn(rng) ? 1 : -1);
        for (std::size_t j = 0; j < n; ++j) c(i, j) = c(i, j) * u;
    }
    return c;
}

/// Exhaustive minimum over all lifts of v (level m) with norm <= bound in the
/// level-2m lattice with Gram g2; empty if there is none.
inline std::optional<std::int64_t> min_lift_norm(const IntMatrix& g2, const IntVector& v, std::size_t n, int m,
                                                 std::int64_t bound) {
    const std::size_t mm = static_cast<std::size_t>(m);
    const auto radii = box_radii(g2, bound);
    std::vector<std::int64_t> r(n * mm);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < mm; ++j) r[i * mm + j] = radii[i * 2 * mm + j + mm];
    std::optional<std::int64_t> best;
    box(r, [&](const IntVector& k) {
        IntVector x(2 * mm * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < mm; ++j) {
                x[i * 2 * mm + j + mm] = k[i * mm + j];
                x[i * 2 * mm + j] = v[i * mm + j] - k[i * mm + j];
            }
        const std::int64_t nx = norm(g2, x);
        if (nx <= bound && (!best || nx < *best)) best = nx;
    });
    return best;
}

}  // namespace oracle
