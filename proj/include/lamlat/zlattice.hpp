/**
 * @file zlattice.hpp
 * @brief Positive definite integral lattices given by Gram matrices.
 *
 * Short-vector enumeration, minimal (irreducible) vectors, the orthogonal
 * decomposition into indecomposable components via the graph of minimal
 * vectors, and a few cheap invariants (determinant, parity, theta prefix).
 */
#pragma once

#include "enumeration.hpp"
#include "errors.hpp"
#include "int_matrix.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace lamlat {

class IntegralLattice {
public:
    static IntegralLattice validate(IntMatrix gram) {
        if (!gram.is_square()) throw DimensionMismatch("Gram matrix must be square");
        if (gram.rows() == 0) throw DimensionMismatch("lattice must have positive rank");
        for (std::size_t i = 0; i < gram.rows(); ++i)
            for (std::size_t j = i + 1; j < gram.rows(); ++j)
                if (gram(i, j) != gram(j, i))
                    throw NotSymmetric("asymmetric Gram matrix at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        return IntegralLattice(std::move(gram));
    }
    static IntegralLattice identity(std::size_t n) { return IntegralLattice(IntMatrix::identity(n)); }

    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }

    std::int64_t inner(const IntVector& x, const IntVector& y) const {
        check(x);
        check(y);
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            std::int64_t row = 0;
            for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * y[j];
            s += x[i] * row;
        }
        return s;
    }
    std::int64_t norm(const IntVector& x) const { return inner(x, x); }

    /// G x, handy when many inner products against x are needed.
    IntVector apply(const IntVector& x) const {
        check(x);
        IntVector r(rank(), 0);
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) r[i] += gram_(i, j) * x[j];
        return r;
    }

    /// Gram matrix of the sublattice spanned by the rows of `basis`.
    IntegralLattice sublattice(const std::vector<IntVector>& basis) const {
        IntMatrix g(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const IntVector gi = apply(basis[i]);
            for (std::size_t j = 0; j < basis.size(); ++j)
                g(i, j) = std::inner_product(gi.begin(), gi.end(), basis[j].begin(), std::int64_t{0});
        }
        return IntegralLattice(std::move(g));
    }

    friend bool operator==(const IntegralLattice&, const IntegralLattice&) = default;

private:
    explicit IntegralLattice(IntMatrix g) : gram_(std::move(g)) {}
    void check(const IntVector& x) const {
        if (x.size() != rank()) throw DimensionMismatch("vector length does not match lattice rank");
    }
    IntMatrix gram_;
};

inline IntegralLattice orthogonal_sum(const std::vector<IntegralLattice>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.rank();
    IntMatrix g(n, n, 0);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rank(); ++i)
            for (std::size_t j = 0; j < p.rank(); ++j) g(off + i, off + j) = p.gram()(i, j);
        off += p.rank();
    }
    return IntegralLattice::validate(std::move(g));
}

struct ShortVector {
    IntVector coords;
    std::int64_t norm;
    friend bool operator==(const ShortVector&, const ShortVector&) = default;
};

/// All nonzero vectors of norm <= bound, one per +-pair (first nonzero
/// coordinate positive), sorted by (norm, coords).
struct ShortVectorSet {
    std::int64_t bound = 0;
    std::vector<ShortVector> vectors;
    friend bool operator==(const ShortVectorSet&, const ShortVectorSet&) = default;
};

/// Sylvester's criterion on exact leading minors.
inline bool is_positive_definite(const IntegralLattice& lat) {
    for (const auto& d : leading_minors(lat.gram()))
        if (d <= 0) return false;
    return true;
}

inline BigInt determinant(const IntegralLattice& lat) { return bareiss_determinant(lat.gram()); }

enum class Parity { odd, even };

inline Parity parity(const IntegralLattice& lat) {
    for (std::size_t i = 0; i < lat.rank(); ++i)
        if (lat.gram()(i, i) % 2 != 0) return Parity::odd;
    return Parity::even;
}

inline const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

inline void canonicalize_sign(IntVector& v) {
    for (auto x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        return;
    }
}

inline void require_definite(const IntegralLattice& lat) {
    if (!is_positive_definite(lat)) throw NotDefinite();
}

/// LLL-reduced presentation of a lattice: gram = U G U^T.
inline LllResult reduced_presentation(const IntegralLattice& lat) {
    require_definite(lat);
    return lll_reduce_gram(lat.gram());
}

inline ShortVectorSet enumerate_up_to(const IntegralLattice& lat, std::int64_t bound) {
    const LllResult red = reduced_presentation(lat);
    ShortVectorSet out;
    out.bound = bound;
    if (bound <= 0) return out;
    const std::size_t n = lat.rank();
    const ShortVectorSearch search(red.gram, bound);
    const auto tops = search.top_values(bound, true);
    auto chunks = parallel_map<std::vector<ShortVector>>(tops.size(), [&](std::size_t t) {
        ShortVectorSearch local = search;
        std::vector<ShortVector> found;
        std::int64_t b = bound;
        local.run(b, tops[t], true, [&](const IntVector& y, std::int64_t norm, std::int64_t&) {
            IntVector x(n, 0);
            for (std::size_t k = 0; k < n; ++k)
                if (y[k] != 0)
                    for (std::size_t i = 0; i < n; ++i) x[i] += y[k] * red.transform(k, i);
            canonicalize_sign(x);
            found.push_back({std::move(x), norm});
        });
        return found;
    });
    for (auto& c : chunks)
        for (auto& v : c) out.vectors.push_back(std::move(v));
    std::sort(out.vectors.begin(), out.vectors.end(), [](const ShortVector& a, const ShortVector& b) {
        return a.norm != b.norm ? a.norm < b.norm : a.coords < b.coords;
    });
    return out;
}

/// Counts (with both signs, and the zero vector at norm 0) per norm 0..bound.
inline std::vector<std::uint64_t> theta_prefix(const IntegralLattice& lat, std::int64_t bound) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(bound, 0)) + 1, 0);
    counts[0] = 1;
    if (bound <= 0) {
        require_definite(lat);
        return counts;
    }
    for (const auto& v : enumerate_up_to(lat, bound).vectors) counts[static_cast<std::size_t>(v.norm)] += 2;
    return counts;
}

/// x is non-minimal iff some y with |y|^2 < |x|^2 has |x-y|^2 < |x|^2, i.e. 2|<x,y>| > |y|^2 for +-y.
inline bool splits_against(std::int64_t inner_xy, std::int64_t norm_y) { return 2 * std::abs(inner_xy) > norm_y; }

inline bool is_minimal(const IntegralLattice& lat, const IntVector& x) {
    require_definite(lat);
    const std::int64_t nx = lat.norm(x);
    if (nx == 0) throw ZeroVector();
    const IntVector gx = lat.apply(x);
    for (const auto& y : enumerate_up_to(lat, nx - 1).vectors) {
        const std::int64_t ip = std::inner_product(gx.begin(), gx.end(), y.coords.begin(), std::int64_t{0});
        if (splits_against(ip, y.norm)) return false;
    }
    return true;
}

struct DecompositionComponent {
    std::vector<std::size_t> members;  ///< indices into Decomposition::minimal_vectors
    std::size_t rank = 0;
    BigInt det;
    std::vector<IntVector> basis;      ///< Z-basis of the component (Hermite form)
    friend bool operator==(const DecompositionComponent&, const DecompositionComponent&) = default;
};

struct Decomposition {
    std::int64_t bound = 0;                  ///< norm bound of the generating search
    std::vector<ShortVector> minimal_vectors;
    std::vector<DecompositionComponent> components;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Minimal vectors among an enumerated set that is complete up to `bound`.
inline std::vector<ShortVector> minimal_subset(const IntegralLattice& lat, const std::vector<ShortVector>& all) {
    std::vector<IntVector> applied(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) applied[i] = lat.apply(all[i].coords);
    const auto keep = parallel_map<char>(all.size(), [&](std::size_t i) -> char {
        const auto& gx = applied[i];
        for (std::size_t j = 0; j < all.size() && all[j].norm < all[i].norm; ++j) {
            const auto& y = all[j].coords;
            const std::int64_t ip = std::inner_product(gx.begin(), gx.end(), y.begin(), std::int64_t{0});
            if (splits_against(ip, all[j].norm)) return 0;
        }
        return 1;
    });
    std::vector<ShortVector> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (keep[i]) out.push_back(all[i]);
    return out;
}

/// Decomposition from the minimal vectors of norm <= bound. Throws
/// GeneratorsInsufficient(2 * bound) if they do not generate the lattice.
inline Decomposition decompose_with_bound(const IntegralLattice& lat, std::int64_t bound) {
    const std::size_t n = lat.rank();
    Decomposition dec;
    dec.bound = bound;
    dec.minimal_vectors = minimal_subset(lat, enumerate_up_to(lat, bound).vectors);
    const auto& mv = dec.minimal_vectors;

    // Union-find over nonzero inner products.
    std::vector<std::size_t> parent(mv.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < mv.size(); ++i) {
        const IntVector gi = lat.apply(mv[i].coords);
        for (std::size_t j = i + 1; j < mv.size(); ++j) {
            if (find(i) == find(j)) continue;
            if (std::inner_product(gi.begin(), gi.end(), mv[j].coords.begin(), std::int64_t{0}) != 0)
                parent[find(i)] = find(j);
        }
    }
    std::vector<std::size_t> root_order;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < mv.size(); ++i) {
        const std::size_t r = find(i);
        auto it = std::find(root_order.begin(), root_order.end(), r);
        if (it == root_order.end()) {
            root_order.push_back(r);
            groups.push_back({i});
        } else {
            groups[static_cast<std::size_t>(it - root_order.begin())].push_back(i);
        }
    }

    std::size_t rank_sum = 0;
    BigInt det_product = 1;
    for (auto& g : groups) {
        EchelonSpan span(n);
        for (std::size_t idx : g) {
            std::vector<BigInt> v(mv[idx].coords.begin(), mv[idx].coords.end());
            span.add(std::move(v));
        }
        DecompositionComponent c;
        c.members = std::move(g);
        c.rank = span.rank();
        for (const auto& row : span.basis()) {
            IntVector r;
            for (const auto& x : row) r.push_back(to_int64(x));
            c.basis.push_back(std::move(r));
        }
        c.det = determinant(lat.sublattice(c.basis));
        rank_sum += c.rank;
        det_product *= c.det;
        dec.components.push_back(std::move(c));
    }
    if (rank_sum != n || det_product != determinant(lat)) throw GeneratorsInsufficient(2 * bound);
    return dec;
}

/// Orthogonal decomposition into indecomposable components. The search bound
/// starts at the largest diagonal entry of an LLL-reduced Gram matrix (whose
/// basis is itself generated by minimal vectors of at most that norm) and
/// doubles if the minimal vectors found do not generate.
inline Decomposition decompose(const IntegralLattice& lat) {
    const LllResult red = reduced_presentation(lat);
    std::int64_t bound = 1;
    for (std::size_t i = 0; i < lat.rank(); ++i) bound = std::max(bound, red.gram(i, i));
    for (;;) {
        try {
            return decompose_with_bound(lat, bound);
        } catch (const GeneratorsInsufficient& e) {
            bound = e.suggested_bound;
        }
    }
}

/// Isometric to Z^n with the identity form. Norm-1 vectors are pairwise
/// orthogonal or equal up to sign, so this holds iff there are exactly rank
/// of them up to sign.
inline bool is_standard(const IntegralLattice& lat) {
    return enumerate_up_to(lat, 1).vectors.size() == lat.rank();
}

}  // namespace lamlat
