#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lamlat;

namespace {

const LaurentPoly t = LaurentPoly::t();
const LaurentPoly f = LaurentPoly::f();

TEST(HermForm, ValidateRejectsNonHermitian) {
    try {
        HermitianForm::validate(PolyMatrix{{1, t}, {t, 1}});
        FAIL() << "expected HermitianViolation";
    } catch (const HermitianViolation& e) {
        EXPECT_EQ(e.row, 1u);
        EXPECT_EQ(e.col, 2u);
    }
    EXPECT_THROW(HermitianForm::validate(PolyMatrix(2, 3, 0)), DimensionMismatch);
    EXPECT_NO_THROW(HermitianForm::validate(PolyMatrix{{1, t}, {t.involute(), 1}}));
}

TEST(HermForm, PairingIsSesquilinear) {
    const auto l = corpus::ht_l();
    std::mt19937_64 rng(21);
    for (int it = 0; it < 50; ++it) {
        LambdaVector u(4), v(4);
        for (auto& p : u) p = oracle::random_poly(rng, -1, 1, 2);
        for (auto& p : v) p = oracle::random_poly(rng, -1, 1, 2);
        const LaurentPoly c = oracle::random_poly(rng, -1, 1, 2);
        LambdaVector cu = u, cv = v;
        for (auto& p : cu) p = c * p;
        for (auto& p : cv) p = c * p;
        EXPECT_EQ(lambda_pairing(l, u, v).involute(), lambda_pairing(l, v, u));
        EXPECT_EQ(lambda_pairing(l, cu, v), c.involute() * lambda_pairing(l, u, v));
        EXPECT_EQ(lambda_pairing(l, u, cv), c * lambda_pairing(l, u, v));
        EXPECT_TRUE(lambda_pairing(l, u, u).is_symmetric());
    }
}

TEST(HermForm, SquareProfileOfBasisVectors) {
    const auto l = corpus::ht_l();
    const std::int64_t expected[] = {3, 3, 2, 2};
    const int exponents[] = {2, 2, 0, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto s = sq_profile(l, unit_vector(4, i));
        EXPECT_EQ(s.sq, expected[i]);
        EXPECT_EQ(s.exponent, exponents[i]);
        EXPECT_EQ(s.lambda_sq, l(i, i));
    }
    LambdaVector d{1, -1, 0, 0};
    EXPECT_EQ(sq_profile(l, d).sq, 2);
    EXPECT_THROW(sq_profile(l, LambdaVector{1, 0}), DimensionMismatch);
}

TEST(HermForm, DeterminantOfL) { EXPECT_EQ(determinant(corpus::ht_l()), LaurentPoly(1)); }

TEST(HermForm, DeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 20; ++it) {
        PolyMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = oracle::random_poly(rng, -1, 1, 2);
        const LaurentPoly cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                                m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                                m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        EXPECT_EQ(subset_determinant(m), cof);
    }
}

TEST(HermForm, BasisChangeAndInverseReproduceA) {
    const auto a = change_basis(corpus::ht_basis_change(), corpus::ht_l());
    EXPECT_EQ(a, corpus::ht_a());
    EXPECT_EQ(inverse(a), corpus::ht_a_inv());
    EXPECT_EQ(a.entries() * corpus::ht_a_inv().entries(), PolyMatrix::identity(4));
}

TEST(HermForm, InverseRequiresUnitDeterminant) {
    EXPECT_THROW(inverse(HermitianForm::validate(PolyMatrix{{2, 1}, {1, 2}})), NotAUnit);
    const auto h = HermitianForm::validate(PolyMatrix{{2, 1}, {1, 1}});
    EXPECT_EQ(inverse(h).entries(), (PolyMatrix{{1, -1}, {-1, 2}}));
}

TEST(HermForm, ChangeBasisDeterminantRule) {
    std::mt19937_64 rng(23);
    const auto l = corpus::ht_l();
    for (int it = 0; it < 10; ++it) {
        const PolyMatrix p = oracle::random_unimodular_lambda(rng, 4);
        const LaurentPoly dp = subset_determinant(p);
        ASSERT_TRUE(dp.is_unit());
        const auto b = change_basis(p, l);
        EXPECT_EQ(determinant(b), dp.involute() * dp);
        EXPECT_EQ(b, HermitianForm::validate(b.entries()));
    }
}

TEST(HermForm, MaxExponent) {
    EXPECT_EQ(corpus::ht_l().max_exponent(), 2);
    EXPECT_EQ(HermitianForm::identity(3).max_exponent(), 0);
}

}  // namespace
