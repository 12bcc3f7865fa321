#include <cmath>

#include "common.hpp"
#include "wcount/generators.hpp"
#include "wcount/interpolation.hpp"
#include "wcount/oracle.hpp"

namespace wcount {
namespace {

using testing::error_of;

TEST(GammaTest, SmallCases) {
    EXPECT_NEAR(effective_gamma(testing::i1()), 2.3, 1e-15);
    // Weights exactly at beta / (r sqrt c).
    auto at_beta = testing::i3();
    for (auto& w : at_beta.w) {
        w = kBeta / (2.0 * std::sqrt(2.0));
    }
    EXPECT_NEAR(effective_gamma(at_beta), 46.0 / 45.0, 1e-14);
    for (auto& w : at_beta.w) {
        w = kAlpha / (2.0 * std::sqrt(2.0));
    }
    EXPECT_NEAR(effective_gamma(at_beta), 1.0, 1e-14);
    EXPECT_EQ(error_of([] { effective_gamma(testing::i1("0")); }), ErrorKind::AllWeightsZero);
    auto code = testing::code(3, 1, 2, {{1, 1, 1}, {1, 2, 2}}, "0.1");
    EXPECT_NEAR(effective_gamma(code), 1.15, 1e-15);
}

TEST(TruncationTest, ChoosesTheSmallestOrder) {
    EXPECT_NEAR(truncation_bound(2, 2.3, 7), 5.65e-4, 1e-6);
    EXPECT_NEAR(truncation_bound(2, 2.3, 6), 1.4846e-3, 1e-7);
    EXPECT_EQ(choose_s(2, 2.3, 1e-3), 7);
    EXPECT_EQ(choose_s(2, 2.3, 100.0), 0);
    for (double gamma : {1.1, 1.5, 2.3, 5.0}) {
        for (double eps : {1e-1, 1e-3, 1e-6}) {
            for (long n : {2L, 10L, 1000L}) {
                int s = choose_s(n, gamma, eps);
                EXPECT_LE(truncation_bound(n, gamma, s), eps);
                if (s > 0) {
                    EXPECT_GT(truncation_bound(n, gamma, s - 1), eps);
                }
            }
        }
    }
    int s = choose_s(2, 46.0 / 45.0, 1e-3);
    EXPECT_EQ(s, 265);
    EXPECT_EQ(error_of([] { choose_s(2, 1.0, 1e-3); }), ErrorKind::GammaNotGreaterThanOne);
    EXPECT_EQ(error_of([] { truncation_bound(2, 0.9, 3); }), ErrorKind::GammaNotGreaterThanOne);
    EXPECT_EQ(error_of([] { choose_s(2, 2.0, 0.0); }), ErrorKind::InvalidInput);
}

TEST(TaylorTest, SmallCases) {
    auto c = taylor_from_sigma({0.0, 0.0, -0.02, 0.0, 0.0002}, 4);
    EXPECT_CNEAR(c[1], 0.0, 0.0);
    EXPECT_CNEAR(c[2], 0.01, 1e-18);
    EXPECT_CNEAR(c[3], 0.0, 0.0);
    EXPECT_CNEAR(c[4], -5e-5, 1e-19);
    auto c3 = taylor_from_sigma({0.0, 0.0, 0.0, -0.003}, 3);
    EXPECT_CNEAR(c3[3], 0.001, 1e-18);
    auto zero = taylor_from_sigma({0.0, 0.0, 0.0}, 2);
    EXPECT_CNEAR(zero[1] + zero[2], 0.0, 0.0);
}

TEST(ApproxTest, I1) {
    auto rep = approx_w(testing::i1());
    EXPECT_EQ(rep.s, 7);
    EXPECT_NEAR(*rep.gamma, 2.3, 1e-15);
    EXPECT_LE(*rep.bound, 1e-3);
    EXPECT_TRUE(rep.certified);
    EXPECT_LE(testing::log_gap(rep.value, 1.01), 1e-3);
    EXPECT_EQ(rep.degree_bound, 2);
    EXPECT_EQ(rep.k_computed, 2);

    auto twice = approx_w(testing::i1_twice());
    EXPECT_LE(testing::log_gap(twice.value, 1.0201), 1e-3);
}

TEST(ApproxTest, ZeroWeights) {
    auto rep = approx_w(testing::i1("0"));
    EXPECT_EQ(rep.value, Complex(1.0));
    EXPECT_EQ(rep.s, 0);
}

TEST(ApproxTest, OutsideTheRegion) {
    auto inst = testing::i1("0.3");
    EXPECT_EQ(error_of([&] { approx_w(inst); }), ErrorKind::GammaNotGreaterThanOne);
    ApproxOptions o;
    o.force = true;
    auto rep = approx_w(inst, o);
    EXPECT_FALSE(rep.certified);
    EXPECT_FALSE(rep.warnings.empty());
    EXPECT_EQ(rep.s, 2);
    EXPECT_FALSE(rep.bound.has_value());
}

TEST(ApproxTest, OptionsAreValidated) {
    ApproxOptions o;
    o.epsilon = 0.0;
    EXPECT_EQ(error_of([&] { approx_w(testing::i1(), o); }), ErrorKind::InvalidInput);
    ApproxOptions neg;
    neg.s_override = -1;
    EXPECT_EQ(error_of([&] { approx_w(testing::i1(), neg); }), ErrorKind::InvalidInput);
}

TEST(ApproxTest, OrderOverride) {
    ApproxOptions o;
    o.s_override = 1;
    auto rep = approx_w(testing::i1(), o);
    EXPECT_EQ(rep.s, 1);
    EXPECT_CNEAR(rep.value, 1.0, 1e-15);
    EXPECT_FALSE(rep.warnings.empty());
}

TEST(ApproxTest, RemovedColumnsMultiplyBack) {
    auto inst = parse_weighted_instance(
        testing::instance_text(2, 3, {{1, 1, 1}, {1, 2, -1}, {2, 1, 1}, {2, 2, -1}}, {1, 1, 2}, "0.1"));
    auto rep = approx_w(inst);
    EXPECT_CNEAR(rep.factor, 1.11, 1e-15);
    EXPECT_LE(testing::log_gap(rep.value, exact_w(inst)), 1e-3);
}

TEST(ApproxTest, WithinEpsilonOnRandomInstances) {
    Rng rng(79);
    for (int t = 0; t < 60; ++t) {
        InstanceParams p;
        p.n = rng.between(2, 12);
        p.m = rng.between(1, 8);
        p.r = rng.between(2, 4);
        p.c = rng.between(1, 3);
        p.exact_magnitude = rng.coin();
        auto inst = random_instance(rng, p);
        for (double eps : {1e-2, 1e-4}) {
            ApproxOptions o;
            o.epsilon = eps;
            auto rep = approx_w(inst, o);
            EXPECT_LE(testing::log_gap(rep.value, exact_w(inst)), eps) << "instance " << t;
        }
    }
}

TEST(ApproxTest, CodesWithinEpsilon) {
    auto rep2 = approx_code_weight(testing::code(2, 1, 2, {{1, 1, 1}, {1, 2, 1}}, "0.1"));
    EXPECT_LE(testing::log_gap(rep2.value, 1.01), 1e-3);
    auto rep3 = approx_code_weight(testing::code(3, 1, 2, {{1, 1, 1}, {1, 2, 2}}, "0.05"));
    EXPECT_LE(testing::log_gap(rep3.value, 1.005), 1e-3);
    auto zero = approx_code_weight(testing::code(2, 1, 2, {{1, 1, 1}, {1, 2, 1}}, "0"));
    EXPECT_EQ(zero.value, Complex(1.0));
}

}  // namespace
}  // namespace wcount
