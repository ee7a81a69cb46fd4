/**
 * @file herm_form.hpp
 * @brief Hermitian matrices over Z[t, 1/t] and Λ-valued pairings.
 *
 * Convention: the pairing is conjugate-linear in its first argument and
 * linear in its second, h(u, v) = sum_ij bar(u_i) a_ij v_j. With this
 * convention a_ij is the pairing of the i-th and j-th basis vector and
 * the Z-intersection of t^j x_i with t^k x_l is the coefficient of
 * t^(j-k) in a_il.
 */
#pragma once

#include "errors.hpp"
#include "laurent.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace lamlat {

using PolyMatrix = Matrix<LaurentPoly>;
using LambdaVector = std::vector<LaurentPoly>;

inline LaurentPoly power(const LaurentPoly& p, unsigned k) {
    LaurentPoly r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

inline PolyMatrix involute(const PolyMatrix& m) {
    return m.map([](const LaurentPoly& p) { return p.involute(); });
}

/// Unit basis vector e_i (0-based) of length n.
inline LambdaVector unit_vector(std::size_t n, std::size_t i) {
    LambdaVector v(n);
    v.at(i) = 1;
    return v;
}

class HermitianForm {
public:
    /// Throws HermitianViolation (1-based indices) unless a_ij = bar(a_ji).
    static HermitianForm validate(PolyMatrix entries) {
        if (!entries.is_square()) throw DimensionMismatch("Hermitian form must be square");
        if (entries.rows() == 0) throw DimensionMismatch("Hermitian form must have positive rank");
        const std::size_t n = entries.rows();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                if (!(entries(i, j) == entries(j, i).involute())) throw HermitianViolation(i + 1, j + 1);
        return HermitianForm(std::move(entries));
    }

    static HermitianForm identity(std::size_t n) { return HermitianForm(PolyMatrix::identity(n)); }

    /// Constant-coefficient form from an integer Gram matrix.
    template <class Int>
    static HermitianForm from_integer(const Matrix<Int>& gram) {
        return validate(gram.map([](const Int& v) { return LaurentPoly(BigInt(v)); }));
    }

    std::size_t rank() const { return entries_.rows(); }
    const PolyMatrix& entries() const { return entries_; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    /// Largest |degree| over all entries (0 for a constant form).
    int max_exponent() const {
        int e = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                if (auto b = entries_(i, j).degree_bounds()) e = std::max({e, b->max_degree, -b->min_degree});
        return e;
    }

    friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

private:
    explicit HermitianForm(PolyMatrix m) : entries_(std::move(m)) {}
    PolyMatrix entries_;
};

inline void check_length(const HermitianForm& a, const LambdaVector& v) {
    if (v.size() != a.rank())
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " against form of rank " +
                                std::to_string(a.rank()));
}

inline LaurentPoly lambda_pairing(const HermitianForm& a, const LambdaVector& u, const LambdaVector& v) {
    check_length(a, u);
    check_length(a, v);
    LaurentPoly sum;
    for (std::size_t j = 0; j < a.rank(); ++j) {
        if (v[j].is_zero()) continue;
        LaurentPoly col;  // sum_i bar(u_i) a_ij
        for (std::size_t i = 0; i < a.rank(); ++i)
            if (!u[i].is_zero()) col += u[i].involute() * a(i, j);
        sum += col * v[j];
    }
    return sum;
}

struct SquareProfile {
    LaurentPoly lambda_sq;          ///< h(v, v), t-symmetric
    BigInt sq;                      ///< its constant coefficient
    std::optional<int> exponent;    ///< its top degree; empty for v = 0
};

inline SquareProfile sq_profile(const HermitianForm& a, const LambdaVector& v) {
    SquareProfile p;
    p.lambda_sq = lambda_pairing(a, v, v);
    p.sq = p.lambda_sq.constant_term();
    if (auto b = p.lambda_sq.degree_bounds()) p.exponent = b->max_degree;
    return p;
}

inline LaurentPoly determinant(const HermitianForm& a) { return subset_determinant(a.entries()); }

/// Exact inverse; throws NotAUnit unless det(a) = +-t^k.
inline HermitianForm inverse(const HermitianForm& a) {
    const LaurentPoly det = determinant(a);
    if (!det.is_unit()) throw NotAUnit(det.str());
    const auto& [deg, c] = *det.terms().begin();
    const LaurentPoly det_inv = LaurentPoly::monomial(-deg, c);  // c = +-1 is its own inverse
    PolyMatrix inv = adjugate(a.entries()).map([&](const LaurentPoly& p) { return p * det_inv; });
    return HermitianForm::validate(std::move(inv));
}

/// Form in the basis whose vectors are the rows of `p` (old coordinates): bar(P) A P^T.
inline HermitianForm change_basis(const PolyMatrix& p, const HermitianForm& a) {
    if (!p.is_square() || p.rows() != a.rank()) throw DimensionMismatch("change of basis matrix must be rank x rank");
    return HermitianForm::validate(involute(p) * a.entries() * p.transposed());
}

}  // namespace lamlat
