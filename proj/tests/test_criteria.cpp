#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lamlat;

namespace {

const LaurentPoly t = LaurentPoly::t();
const LaurentPoly f = LaurentPoly::f();

bool has_witness(const std::vector<WindingWitness>& ws, const std::string& name) {
    return std::any_of(ws.begin(), ws.end(), [&](const WindingWitness& w) { return w.name == name; });
}

TEST(Criteria, DiagonalSplit) {
    EXPECT_EQ(diagonal_split(1 + f + f * f), (DiagonalSplit{1, 1 + t + t * t}));
    EXPECT_EQ(diagonal_split(2), (DiagonalSplit{0, 1}));
    EXPECT_EQ(diagonal_split(1), (DiagonalSplit{1, 0}));
    EXPECT_THROW(diagonal_split(t), NotSymmetric);
    EXPECT_THROW(diagonal_split(-1 + f), NegativeConstant);
}

TEST(Criteria, DiagonalSplitRoundTrip) {
    std::mt19937_64 rng(51);
    for (int it = 0; it < 100; ++it) {
        LaurentPoly h = oracle::random_poly(rng, 0, 3, 4);
        LaurentPoly a = h + h.involute();
        a += std::abs(static_cast<long long>(a.constant_term())) + (it % 3);
        const auto s = diagonal_split(a);
        EXPECT_EQ(s.epsilon + s.a_prime + s.a_prime.involute(), a);
        EXPECT_GE(s.a_prime.constant_term(), 0);
        if (auto b = s.a_prime.degree_bounds()) EXPECT_GE(b->min_degree, 0);
    }
}

TEST(Criteria, WindingBoundOfA) {
    const auto w = winding_bound(corpus::ht_a());
    EXPECT_EQ(w.max_deg, 3);
    EXPECT_EQ(w.min_deg, -2);
    EXPECT_EQ(w.lambda, 5);
    ASSERT_EQ(w.max_witnesses.size(), 2u);
    EXPECT_EQ(w.max_witnesses[0].name, "c13");
    EXPECT_EQ(w.max_witnesses[1].name, "c14");
    // a'11 * b13, with b13 = -1 - 2f read off the inverse
    EXPECT_EQ(w.max_witnesses[0].poly, (1 + t + t * t) * (-1 - 2 * f));
    EXPECT_EQ(w.max_witnesses[1].poly, w.max_witnesses[0].poly);
    std::vector<std::string> mins;
    for (const auto& x : w.min_witnesses) mins.push_back(x.name);
    EXPECT_EQ(mins, (std::vector<std::string>{"b34", "a'11(t^-1)", "c33", "c34", "c43", "c44"}));
    EXPECT_EQ(w.min_witnesses[0].poly, f + f * f);
    EXPECT_EQ(w.min_witnesses[1].poly, 1 + t.involute() + t.involute() * t.involute());
    EXPECT_EQ(w.min_witnesses[2].poly, -(1 + 2 * f + 2 * f * f) + (1 + t + t * t));
    EXPECT_EQ(w.min_witnesses[3].poly, -f - f * f);
    EXPECT_EQ(w.min_witnesses[4].poly, -2 * f - 2 * f * f);
}

TEST(Criteria, WindingBoundTrivialCases) {
    EXPECT_EQ(winding_bound(HermitianForm::identity(4)).lambda, 0);
    EXPECT_EQ(winding_bound(HermitianForm::validate(PolyMatrix{{2, 1}, {1, 1}})).lambda, 0);
    EXPECT_THROW(winding_bound(HermitianForm::validate(PolyMatrix{{2, 1}, {1, 2}})), NotAUnit);
}

TEST(Criteria, WindingBoundIsConjugationInvariant) {
    for (const auto& a : {corpus::ht_a(), corpus::ht_l()}) {
        const auto w = winding_bound(a);
        const auto wc = winding_bound(HermitianForm::validate(involute(a.entries())));
        EXPECT_EQ(w.lambda, wc.lambda);
    }
}

TEST(Criteria, WindingSweepNeverWorse) {
    const auto a = corpus::ht_a();
    EXPECT_LE(winding_bound_sweep(a).lambda, winding_bound(a).lambda);
}

TEST(Criteria, HsosExamples) {
    const auto c = hsos(2 + f, 2).certificate;
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, std::vector<LaurentPoly>{1 + t});
    EXPECT_EQ(*hsos(1, 3).certificate, std::vector<LaurentPoly>{1});
    EXPECT_FALSE(hsos(1 + f + f * f, 4).certificate.has_value());
    EXPECT_THROW(hsos(t, 2), NotSymmetric);
}

TEST(Criteria, HsosCertificatesVerifyAndAreMonotone) {
    std::mt19937_64 rng(52);
    for (int it = 0; it < 40; ++it) {
        const auto a = oracle::random_poly(rng, 0, 1, 1), b = oracle::random_poly(rng, 0, 2, 1);
        const LaurentPoly target = a * a.involute() + b * b.involute();
        for (int d = 0; d <= 3; ++d) {
            const auto h = hsos(target, d);
            if (h.certificate) {
                EXPECT_EQ(hsos_value(*h.certificate), target);
                EXPECT_TRUE(hsos(target, d + 1).certificate.has_value());
            }
        }
        EXPECT_TRUE(hsos(target, 2).certificate.has_value());
    }
}

TEST(Criteria, HsosMassOneMeansOne) {
    for (const auto& p : {LaurentPoly(1), 1 + f, f, LaurentPoly(0)}) {
        const auto h = hsos(p, 3);
        if (!h.certificate) continue;
        BigInt mass = 0;
        for (const auto& q : *h.certificate) mass += q.mass();
        if (mass == 1) EXPECT_EQ(p, LaurentPoly(1));
    }
}

TEST(Criteria, FactorSearch) {
    const auto id = HermitianForm::identity(3);
    const auto c = factor_search(id, 2).certificate;
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, PolyMatrix::identity(3));
    PolyMatrix diag_t(3, 3, 0);
    for (std::size_t i = 0; i < 3; ++i) diag_t(i, i) = t;
    EXPECT_TRUE(verify_factor(id, diag_t));
    EXPECT_FALSE(factor_search(corpus::ht_l(), 4).certificate.has_value());
}

TEST(Criteria, FactorSearchRecoversRandomSplitForms) {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 8; ++it) {
        const PolyMatrix c = oracle::random_unimodular_lambda(rng, 2);
        const auto a = HermitianForm::validate(involute(c) * c.transposed());
        const auto found = factor_search(a, a.max_exponent() + 2).certificate;
        ASSERT_TRUE(found) << "iteration " << it;
        EXPECT_TRUE(verify_factor(a, *found));
    }
}

TEST(Criteria, UnitElements) {
    EXPECT_EQ(unit_element_search(HermitianForm::identity(3), 1).size(), 3u);
    EXPECT_EQ(unit_element_search(HermitianForm::validate(PolyMatrix{{1}}), 2).size(), 1u);
    EXPECT_TRUE(unit_element_search(corpus::ht_l(), 2 * corpus::ht_l().max_exponent() + 1).empty());
}

TEST(Criteria, SmallGenerators) {
    EXPECT_TRUE(small_generator_check(HermitianForm::identity(2), 3).pass);
    EXPECT_FALSE(small_generator_check(corpus::ht_l(), 3).pass);
    EXPECT_TRUE(small_generator_check(HermitianForm::from_integer(corpus::e8().gram()), 1).pass);
}

TEST(Criteria, MinimalStability) {
    for (const auto& r : minimal_stability_check(HermitianForm::identity(2), unit_vector(2, 0), {1, 2, 3}))
        EXPECT_TRUE(r.inequality_holds);
    const auto l = corpus::ht_l();
    const auto r1 = minimal_stability_check(l, unit_vector(4, 0), {1}).front();
    EXPECT_EQ(r1.reduced_norm, 7);
    EXPECT_EQ(r1.min_lift_norm, 5);
    EXPECT_FALSE(r1.inequality_holds);
    EXPECT_TRUE(minimal_stability_check(l, unit_vector(4, 2), {3}).front().is_minimal);
    EXPECT_THROW(minimal_stability_check(l, LambdaVector(4, 0), {1}), ZeroVector);
}

TEST(Criteria, ReportForIdentity) {
    const auto r = split_report(HermitianForm::identity(2));
    EXPECT_EQ(r.verdict, OverallVerdict::split_certified);
    const auto factor = std::find_if(r.checks.begin(), r.checks.end(), [](const SplitCheck& c) { return c.name == "factor"; });
    ASSERT_NE(factor, r.checks.end());
    EXPECT_EQ(factor->verdict, Verdict::pass);
    EXPECT_NE(render_text(r).find("certificate"), std::string::npos);
}

TEST(Criteria, ReportForLIsObstructed) {
    SplitParams p;
    p.m_max = 3;
    const auto r = split_report(corpus::ht_l(), p);
    EXPECT_EQ(r.verdict, OverallVerdict::obstructed);
    for (const auto& c : r.checks) {
        if (c.name == "standard_reductions" || c.name == "minimal_stability") EXPECT_EQ(c.verdict, Verdict::fail);
        if (c.payload["kind"] == "sufficient") EXPECT_NE(c.verdict, Verdict::pass);
    }
    EXPECT_EQ(report_from_json(report_to_json(r)), r);
}

TEST(Criteria, RandomSplitFormsAreCertified) {
    std::mt19937_64 rng(54);
    for (int it = 0; it < 5; ++it) {
        const PolyMatrix c = oracle::random_unimodular_lambda(rng, 2);
        const auto a = HermitianForm::validate(involute(c) * c.transposed());
        SplitParams p;
        p.m_max = 2;
        EXPECT_EQ(split_report(a, p).verdict, OverallVerdict::split_certified) << "iteration " << it;
    }
}

TEST(Criteria, EmptyReportRenders) {
    SplitReport r;
    EXPECT_NE(render_text(r).find("checks: 0"), std::string::npos);
    EXPECT_EQ(report_from_json(report_to_json(r)), r);
}

}  // namespace
