#include <algorithm>

#include "common.hpp"
#include "wcount/generators.hpp"
#include "wcount/newton.hpp"
#include "wcount/oracle.hpp"
#include "wcount_checks/reference.hpp"

namespace wcount {
namespace {

using testing::error_of;

using Points = std::vector<std::vector<int>>;

TEST(EnumeratePointsTest, SmallSystems) {
    EXPECT_EQ(collect_points(testing::i1(), std::nullopt), (Points{{0, 0}, {1, 1}}));
    EXPECT_EQ(collect_points(testing::i1(), 1L), (Points{{0, 0}}));
    auto inst = parse_weighted_instance(testing::instance_text(1, 2, {{1, 1, 2}, {1, 2, -1}}, {1, 2}, "0.1"));
    EXPECT_EQ(collect_points(inst, std::nullopt), (Points{{0, 0}, {1, 2}}));
}

TEST(EnumeratePointsTest, MatchesOdometerOnRandomInstances) {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        InstanceParams p;
        p.n = rng.between(2, 9);
        p.m = rng.between(1, 6);
        p.nu_max = rng.between(1, 3);
        p.coeff_max = rng.between(1, 3);
        auto inst = random_instance(rng, p);
        auto got = collect_points(inst, std::nullopt);
        auto want = reference::box_points(inst);
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want) << "instance " << t;
    }
}

TEST(EnumeratePointsTest, RefusesLargeBoxes) {
    auto inst = testing::i3();
    EXPECT_EQ(candidate_count(inst.nu, std::nullopt, 100), 8u);
    EXPECT_EQ(candidate_count({3, 3, 3}, std::nullopt, 10), 11u);
    EXPECT_EQ(error_of([&] { collect_points(inst, std::nullopt, 7); }), ErrorKind::EnumerationLimitExceeded);
    EXPECT_NO_THROW(collect_points(inst, std::nullopt, 8));
}

TEST(ExactWeightTest, SmallCases) {
    EXPECT_EQ(exact_w_rational(testing::i1()), GaussianRational::parse("1.01"));
    EXPECT_EQ(exact_w_rational(testing::i1("0")), GaussianRational(1));
    EXPECT_EQ(exact_w_rational(testing::i1_twice()), GaussianRational::parse("1.0201"));
    EXPECT_CNEAR(exact_w(testing::i1()), 1.01, 1e-15);
}

TEST(PiTableTest, SmallCases) {
    auto pi1 = pi_table_exact(testing::i1(), 3);
    EXPECT_EQ(pi1, (std::vector<GaussianRational>{1, 0, GaussianRational::parse("0.01"), 0}));
    auto pi3 = pi_table_exact(testing::i3(), 3);
    EXPECT_EQ(pi3, (std::vector<GaussianRational>{1, 0, 0, GaussianRational::parse("0.001")}));
    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        auto inst = random_instance(rng, InstanceParams{});
        EXPECT_TRUE(pi_table_exact(inst, 2)[1].is_zero());
    }
}

TEST(PiTableTest, MatchesOdometer) {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        InstanceParams p;
        p.n = rng.between(2, 8);
        p.m = rng.between(1, 5);
        auto inst = random_instance(rng, p);
        int s = static_cast<int>(inst.degree());
        EXPECT_EQ(pi_table_exact(inst, s), reference::pi_exact(inst, s)) << "instance " << t;
        auto floating = pi_table(inst, s);
        auto exact = reference::pi_exact(inst, s);
        for (int k = 0; k <= s; ++k) {
            EXPECT_LE(std::abs(floating[k] - exact[k].to_complex()), 1e-15);
        }
    }
}

TEST(WPolynomialTest, TrimsAndMultiplies) {
    auto poly = w_polynomial(testing::i1_twice());
    ASSERT_EQ(poly.size(), 5u);
    EXPECT_EQ(poly[2], GaussianRational::parse("0.02"));
    EXPECT_EQ(poly[4], GaussianRational::parse("0.0001"));
    EXPECT_EQ(w_polynomial(testing::i1("0")).size(), 1u);
}

TEST(RootsTest, SmallCases) {
    auto roots = roots_of_w(testing::i1());
    ASSERT_EQ(roots.size(), 2u);
    for (auto z : roots) {
        EXPECT_NEAR(std::abs(z), 10.0, 1e-12);
        EXPECT_NEAR(z.real(), 0.0, 1e-12);
    }
    EXPECT_TRUE(roots_of_w(testing::i1("0")).empty());
    auto doubled = roots_of_w(testing::i1_twice());
    ASSERT_EQ(doubled.size(), 4u);
    int upper = 0;
    for (auto z : doubled) {
        EXPECT_NEAR(std::abs(z), 10.0, 1e-6);
        upper += z.imag() > 0 ? 1 : 0;
    }
    EXPECT_EQ(upper, 2);
}

TEST(RootsTest, PowerSumsFromRootsMatchNewton) {
    Rng rng(37);
    for (int t = 0; t < 30; ++t) {
        InstanceParams p;
        p.n = rng.between(2, 8);
        p.m = rng.between(1, 5);
        auto inst = random_instance(rng, p);
        const int k = 6;
        auto from_roots = sigma_from_roots(roots_of_w(inst), k);
        auto newton = sigma_from_pi(pi_table_exact(inst, k), k);
        for (int i = 1; i <= k; ++i) {
            // Repeated roots only come back to about half precision.
            EXPECT_LE(testing::scaled_gap(from_roots[i], newton[i].to_complex()), 1e-6) << "instance " << t;
        }
    }
}

TEST(NewtonTest, SmallCases) {
    auto pi = std::vector<GaussianRational>{1, 0, GaussianRational::parse("0.01"), 0, 0};
    auto sigma = sigma_from_pi(pi, 4);
    EXPECT_EQ(sigma, (std::vector<GaussianRational>{0, 0, GaussianRational::parse("-0.02"), 0,
                                                     GaussianRational::parse("0.0002")}));
    EXPECT_EQ(pi_from_sigma(sigma), pi);

    auto flat = sigma_from_pi(std::vector<GaussianRational>{1, 0, 0, 0}, 3);
    EXPECT_TRUE(std::all_of(flat.begin(), flat.end(), [](const auto& v) { return v.is_zero(); }));
    auto one = pi_from_sigma(std::vector<GaussianRational>(4, GaussianRational(0)));
    EXPECT_EQ(one, (std::vector<GaussianRational>{1, 0, 0, 0}));

    auto s3 = sigma_from_pi(pi_table_exact(testing::i3(), 3), 3);
    EXPECT_EQ(s3[3], GaussianRational::parse("-0.003"));
    EXPECT_TRUE(s3[1].is_zero() && s3[2].is_zero());
}

TEST(NewtonTest, RandomRoundTrip) {
    Rng rng(41);
    for (int t = 0; t < 100; ++t) {
        int k = rng.between(1, 8);
        std::vector<Complex> sigma(k + 1, 0.0);
        for (int i = 1; i <= k; ++i) {
            sigma[i] = rng.uniform(-1, 1) * rng.phase();
        }
        auto back = sigma_from_pi(pi_from_sigma(sigma), k);
        for (int i = 1; i <= k; ++i) {
            EXPECT_LE(std::abs(back[i] - sigma[i]), 1e-12);
        }
    }
}

TEST(NewtonTest, ExtendsPastTheDegree) {
    auto pi = pi_table_exact(testing::i1(), 2);
    auto sigma = sigma_from_pi(pi, 2);
    auto longer = extend_sigma(sigma, 2, 8);
    pi.resize(9, GaussianRational(0));
    EXPECT_EQ(longer, sigma_from_pi(pi, 8));
    EXPECT_EQ(error_of([&] { extend_sigma(sigma, 3, 8); }), ErrorKind::InvalidInput);
}

TEST(NewtonTest, RejectsBadTables) {
    EXPECT_EQ(error_of([] { sigma_from_pi(std::vector<Complex>{2.0, 0.0}, 1); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { sigma_from_pi(std::vector<Complex>{1.0}, 1); }), ErrorKind::InvalidInput);
}

TEST(NewtonTest, FaultHookChangesTheResult) {
    auto pi = pi_table_exact(testing::i3(), 6);
    auto good = sigma_from_pi(pi, 6);
    debug::set_newton_fault(true);
    auto bad = sigma_from_pi(pi, 6);
    debug::set_newton_fault(false);
    EXPECT_NE(good, bad);
    EXPECT_EQ(sigma_from_pi(pi, 6), good);
}

}  // namespace
}  // namespace wcount
