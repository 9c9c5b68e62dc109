#include <gtest/gtest.h>

#include "atanderiv/identities.hpp"
#include "oracles.hpp"

using namespace atanderiv;

TEST(IdentityLhs, Examples) {
    EXPECT_EQ(identity_lhs(0, 0), BigRational(1));
    EXPECT_EQ(identity_lhs(2, 0), BigRational(1) - BigRational(1, 4));
    EXPECT_EQ(identity_lhs(4, 1), BigRational(-3, 4) + BigRational(1, 8));
    EXPECT_EQ(identity_lhs(4, 1), BigRational(-5, 8));
    EXPECT_THROW(identity_lhs(4, 3), std::invalid_argument);
}

TEST(IdentityRhs, Examples) {
    EXPECT_EQ(identity_rhs(0, 0), BigRational(1));
    EXPECT_EQ(identity_rhs(2, 0), BigRational(3, 4));
    EXPECT_EQ(identity_rhs(4, 1), BigRational(-10, 16));
    EXPECT_THROW(identity_rhs(1, 1), std::invalid_argument);
}

TEST(IdentitySweep, CaseCounts) {
    auto zero = check_identity_sweep(0);
    EXPECT_TRUE(zero.passed());
    EXPECT_EQ(zero.cases, 1U);
    auto four = check_identity_sweep(4);
    EXPECT_TRUE(four.passed());
    EXPECT_EQ(four.cases, 1U + 1 + 2 + 2 + 3);
}

TEST(IdentitySweep, HoldsUpTo120) {
    auto report = check_identity_sweep(120);
    EXPECT_TRUE(report.passed()) << describe(report.failures.front());
}

TEST(IdentitySweep, InjectedFaultIsReported) {
    auto report = check_identity_sweep(6, {true});
    ASSERT_EQ(report.failures.size(), 1U);
    EXPECT_EQ(report.failures[0].n, 6U);
    EXPECT_EQ(report.failures[0].m, 3U);
}

TEST(Corollary, Examples) {
    EXPECT_EQ(corollary_lhs(0), BigRational(1));
    EXPECT_EQ(corollary_lhs(1), BigRational(1, 2) - BigRational(1, 2));
    EXPECT_EQ(corollary_lhs(2), BigRational(1, 3) - BigRational(1, 2) + BigRational(3, 16));
    EXPECT_EQ(corollary_lhs(2), BigRational(1, 48));
    EXPECT_EQ(corollary_rhs(1), BigRational(0));
    EXPECT_EQ(corollary_rhs(2), BigRational(1, 48));
    EXPECT_EQ(corollary_rhs(0), BigRational(1));
}

TEST(Corollary, SweepAndRecurrence) {
    EXPECT_TRUE(check_corollary_sweep(120).passed());
    auto rec = check_corollary_recurrence(60);
    EXPECT_TRUE(rec.passed());
    EXPECT_EQ(rec.cases, 61U);
    EXPECT_FALSE(check_corollary_sweep(5, {true}).passed());
    EXPECT_FALSE(check_corollary_recurrence(5, {true}).passed());
}

TEST(Corollary, CnClosedForm) {
    // C_n = identity_lhs(2n, 0) = (2n+1) / 4^n
    for (unsigned n = 0; n <= 40; ++n)
        EXPECT_EQ(identity_lhs(2 * n, 0),
                  BigRational(BigInt(static_cast<long>(2 * n + 1)), pow(BigInt(4), n)));
}

TEST(Terminating2F1, Examples) {
    oracle::Rng rng(17);
    for (int i = 0; i < 10; ++i) {
        BigRational b = rng.rational();
        BigRational c = rng.rational();
        if (c.is_zero()) c = BigRational(2, 3);
        auto zero = terminating_2f1({0, b, c});
        EXPECT_EQ(zero.value, BigRational(1));
        EXPECT_EQ(zero.last_index, 0U);
        EXPECT_EQ(terminating_2f1({-1, b, c}).value, BigRational(1) - b / c);
    }
    auto r = terminating_2f1({-1, BigRational(-3, 2), -2});
    EXPECT_EQ(r.value, BigRational(1, 4));
    EXPECT_EQ(r.last_index, 1U);
    // a = 0 never touches c, even when c = 0.
    EXPECT_EQ(terminating_2f1({0, BigRational(1, 2), 0}).value, BigRational(1));
}

TEST(Terminating2F1, VandermondeOracle) {
    // 2F1(-N, b; c; 1) = (c - b)_N / (c)_N
    oracle::Rng rng(23);
    for (unsigned big_n = 0; big_n <= 12; ++big_n) {
        // Never an integer, so only a = -N can end the series.
        BigRational b = rng.rational() + BigRational(1, 11);
        BigRational c = BigRational(static_cast<long>(rng.integer(1, 20)), 7);
        auto r = terminating_2f1({BigRational(-static_cast<long>(big_n)), b, c});
        EXPECT_EQ(r.value, pochhammer(c - b, big_n) / pochhammer(c, big_n));
        EXPECT_EQ(r.last_index, big_n);
    }
}

TEST(Terminating2F1, UsesEarliestTermination) {
    auto r = terminating_2f1({-5, -2, BigRational(1, 2)});
    EXPECT_EQ(r.last_index, 2U);
}

TEST(Terminating2F1, Errors) {
    EXPECT_THROW(terminating_2f1({BigRational(1, 2), BigRational(1, 3), 1}), NonTerminatingSeries);
    EXPECT_THROW(terminating_2f1({BigRational(-1, 2), 3, 1}), NonTerminatingSeries);
    EXPECT_THROW(terminating_2f1({-50, 1, 1}, 10), NonTerminatingSeries);
    EXPECT_THROW(terminating_2f1({-3, 1, -1}), SeriesDivisionByZero);
    EXPECT_NO_THROW(terminating_2f1({-1, 1, -1}));
}

TEST(HypergeometricForm, Examples) {
    auto f21 = hypergeometric_form(2, 1);
    EXPECT_EQ(f21.params.a, BigRational(0));
    EXPECT_EQ(f21.params.b, BigRational(1, 2));
    EXPECT_EQ(f21.params.c, BigRational(-1));
    EXPECT_EQ(f21.series.value, BigRational(1));
    EXPECT_EQ(f21.prefactor, BigRational(-1, 4));
    EXPECT_EQ(f21.value, BigRational(-1, 4));

    EXPECT_EQ(hypergeometric_form(4, 1).value, BigRational(-5, 8));
    EXPECT_EQ(hypergeometric_form(6, 0).value, BigRational(7, 64));
    EXPECT_EQ(hypergeometric_form(0, 0).value, BigRational(1));
    EXPECT_THROW(hypergeometric_form(3, 2), std::invalid_argument);
}

TEST(HypergeometricForm, SingleCaseChecks) {
    EXPECT_TRUE(check_2f1_representation(2, 1).passed());
    EXPECT_TRUE(check_2f1_representation(4, 1).passed());
    EXPECT_TRUE(check_2f1_representation(6, 0).passed());
    EXPECT_FALSE(check_2f1_representation(6, 0, {true}).passed());
}

TEST(HypergeometricForm, SweepWithTerminationIndex) {
    auto report = check_2f1_sweep(60);
    EXPECT_TRUE(report.passed()) << describe(report.failures.front());
    std::size_t expected_cases = 0;
    for (unsigned n = 0; n <= 60; ++n) expected_cases += n / 2 + 1;
    EXPECT_EQ(report.cases, expected_cases);
    for (unsigned n = 0; n <= 30; ++n)
        for (unsigned m = 0; m <= n / 2; ++m)
            ASSERT_EQ(hypergeometric_form(n, m).series.last_index, n / 2 - m);
}
