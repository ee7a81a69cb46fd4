#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lamlat;

namespace {

TEST(Covering, ReductionAtOneIsEvaluation) {
    const auto g = reduce_mod_m(corpus::ht_l(), 1).gram();
    EXPECT_EQ(g, IntMatrix::from_rows({{7, 6, 3, 2}, {6, 7, 2, 3}, {3, 2, 2, 0}, {2, 3, 0, 2}}));
}

TEST(Covering, ReductionsOfLAreUnimodularOdd) {
    for (int m = 1; m <= 5; ++m) {
        const auto lat = reduce_mod_m(corpus::ht_l(), m);
        EXPECT_EQ(lat.rank(), 4u * m);
        EXPECT_EQ(lat.gram(), lat.gram().transposed());
        EXPECT_TRUE(is_positive_definite(lat));
        EXPECT_EQ(determinant(lat), 1);
        EXPECT_EQ(parity(lat), Parity::odd);
    }
}

TEST(Covering, ReductionIsCirculantInvariant) {
    const auto l = corpus::ht_l();
    for (int m = 1; m <= 4; ++m) {
        const auto g = reduce_mod_m(l, m).gram();
        const std::size_t mm = static_cast<std::size_t>(m);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t j = 0; j < mm; ++j)
                    for (std::size_t q = 0; q < mm; ++q)
                        EXPECT_EQ(g(i * mm + j, k * mm + q), g(i * mm + (j + 1) % mm, k * mm + (q + 1) % mm));
    }
}

TEST(Covering, ReducedPairingMatchesWrappedLambdaPairing) {
    const auto l = corpus::ht_l();
    std::mt19937_64 rng(41);
    for (int it = 0; it < 40; ++it) {
        LambdaVector u(4), v(4);
        for (auto& p : u) p = oracle::random_poly(rng, -2, 2, 2);
        for (auto& p : v) p = oracle::random_poly(rng, -2, 2, 2);
        for (int m = 1; m <= 4; ++m) {
            const auto lat = reduce_mod_m(l, m);
            EXPECT_EQ(lat.inner(reduce_vector(u, m), reduce_vector(v, m)), lambda_pairing(l, u, v).coeff_wrap(m, 0));
        }
    }
}

TEST(Covering, StandardnessByFold) {
    const auto l = corpus::ht_l();
    EXPECT_TRUE(is_standard(reduce_mod_m(l, 1)));
    EXPECT_TRUE(is_standard(reduce_mod_m(l, 2)));
    EXPECT_EQ(enumerate_up_to(reduce_mod_m(l, 3), 1).vectors.size(), 0u);
}

TEST(Covering, WindowMatchesPairing) {
    const auto l = corpus::ht_l();
    const int j = 2;
    const auto win = window_gram(l, j);
    std::mt19937_64 rng(42);
    for (int it = 0; it < 40; ++it) {
        LambdaVector u(4), v(4);
        for (auto& p : u) p = oracle::random_poly(rng, -j, j, 2);
        for (auto& p : v) p = oracle::random_poly(rng, -j, j, 2);
        EXPECT_EQ(win.inner(*window_vector(u, j), *window_vector(v, j)), lambda_pairing(l, u, v).constant_term());
        EXPECT_EQ(from_window_vector(*window_vector(u, j), 4, j), u);
    }
    EXPECT_FALSE(window_vector(LambdaVector{LaurentPoly::monomial(3), 0, 0, 0}, 2).has_value());
}

TEST(Covering, ProjectionOfCanonicalLift) {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int m = 1; m <= 4; ++m) {
        IntVector v(4 * static_cast<std::size_t>(m));
        for (auto& x : v) x = c(rng);
        EXPECT_EQ(project_double(canonical_lift(v, 4, m), 4, m), v);
        for (const auto& k : lift_kernel_basis(4, m))
            for (auto x : project_double(k, 4, m)) EXPECT_EQ(x, 0);
    }
}

TEST(Covering, MinimalLiftOfFirstBasisVector) {
    const auto l = corpus::ht_l();
    const IntVector x = reduce_vector(unit_vector(4, 0), 1);
    const auto r = lift_min_norm(l, 1, x);
    EXPECT_EQ(r.min_norm, 5);
    EXPECT_EQ(project_double(r.witness, 4, 1), x);
    EXPECT_EQ(reduce_mod_m(l, 2).norm(r.witness), 5);
    EXPECT_EQ(oracle::min_lift_norm(reduce_mod_m(l, 2).gram(), x, 4, 1, 7), std::optional<std::int64_t>(5));
}

TEST(Covering, MinimalLiftsMatchExhaustiveCosets) {
    const auto l = corpus::ht_l();
    const IntMatrix g2 = reduce_mod_m(l, 2).gram();
    const auto base = reduce_mod_m(l, 1);
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int it = 0; it < 25; ++it) {
        IntVector v(4);
        for (auto& x : v) x = c(rng);
        if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
        const auto r = lift_min_norm(l, 1, v);
        const auto o = oracle::min_lift_norm(g2, v, 4, 1, r.min_norm);
        EXPECT_EQ(o, std::optional<std::int64_t>(r.min_norm));
        EXPECT_EQ((r.min_norm - base.norm(v)) % 2, 0);
    }
}

TEST(Covering, LiftParity) {
    std::mt19937_64 rng(45);
    std::uniform_int_distribution<int> c(-1, 1);
    const auto l = corpus::ht_l();
    for (int m = 1; m <= 3; ++m) {
        const auto base = reduce_mod_m(l, m);
        for (int it = 0; it < 5; ++it) {
            IntVector v(4 * static_cast<std::size_t>(m));
            for (auto& x : v) x = c(rng);
            const std::int64_t nv = base.norm(v);
            for (const auto& lift : enumerate_lifts(l, m, v, nv + 2)) EXPECT_EQ(((lift.norm - nv) % 2 + 2) % 2, 0);
        }
    }
}

TEST(Covering, ZeroVectorLiftsToZero) {
    const auto r = lift_min_norm(corpus::ht_l(), 2, IntVector(8, 0));
    EXPECT_EQ(r.min_norm, 0);
    EXPECT_EQ(r.witness, IntVector(16, 0));
}

TEST(Covering, WindowDeterminantsExceedOne) {
    for (int j = 0; j <= 2; ++j) EXPECT_GT(determinant(window_gram(corpus::ht_l(), j)), 1);
}

}  // namespace
