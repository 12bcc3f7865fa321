#include <cmath>
#include <set>

#include "common.hpp"
#include "wcount/generators.hpp"
#include "wcount_checks/reference.hpp"

namespace wcount {
namespace {

TEST(RngTest, SeedsAreReproducible) {
    Rng a(7);
    Rng b(7);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(a.next(), b.next());
    }
    EXPECT_NE(derive_seed(7, 0), derive_seed(7, 1));
    EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
    EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(RngTest, RangesAreRespected) {
    Rng rng(11);
    std::set<int> seen;
    for (int i = 0; i < 2000; ++i) {
        int v = rng.between(-2, 3);
        EXPECT_GE(v, -2);
        EXPECT_LE(v, 3);
        seen.insert(v);
        double u = rng.unit();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(rng.below(5), 5u);
        EXPECT_NEAR(std::abs(rng.phase()), 1.0, 1e-15);
    }
    EXPECT_EQ(seen.size(), 6u);
}

TEST(RandomInstanceTest, Shape) {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        InstanceParams p;
        p.n = rng.between(2, 14);
        p.m = rng.between(1, 10);
        p.r = rng.between(2, 4);
        p.c = rng.between(1, 3);
        p.exact_magnitude = rng.coin();
        auto inst = random_instance(rng, p);
        auto st = sparsity(inst.a);
        EXPECT_LE(st.r, p.r);
        EXPECT_LE(st.c, p.c);
        EXPECT_LE(inst.cols(), p.n);
        for (int v : inst.nu) {
            EXPECT_GE(v, 1);
            EXPECT_LE(v, p.nu_max);
        }
        double bound = kBeta / (std::max(st.r, 2) * std::sqrt(double(std::max(st.c, 1))));
        for (auto w : inst.w) {
            if (p.exact_magnitude) {
                EXPECT_NEAR(std::abs(w), bound, 1e-12);
            } else {
                EXPECT_LE(std::abs(w), bound * (1 + 1e-12));
            }
        }
        auto check = weight_bound_check(inst, kBeta);
        EXPECT_GE(check.margin, -1e-15 * check.threshold);
    }
}

TEST(RandomInstanceTest, Deterministic) {
    Rng a(17);
    Rng b(17);
    auto x = random_instance(a, InstanceParams{});
    auto y = random_instance(b, InstanceParams{});
    EXPECT_EQ(x.a, y.a);
    EXPECT_EQ(x.w, y.w);
    EXPECT_EQ(x.nu, y.nu);
}

TEST(ScalingInstanceTest, ThreeEntriesPerRowAndColumn) {
    Rng rng(19);
    auto inst = scaling_instance(rng, 120);
    EXPECT_EQ(inst.cols(), 120);
    auto st = sparsity(inst.a);
    EXPECT_LE(st.r, 3);
    EXPECT_LE(st.c, 3);
    EXPECT_TRUE(column_graph(inst.a).size() == 120);
}

TEST(GraphGeneratorsTest, ConnectedAndRegular) {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        auto g = random_connected_graph(rng, rng.between(1, 12), 0.2, 0.2);
        EXPECT_TRUE(g.connected());
        auto r = random_regular_graph(rng, 6 + 2 * rng.between(0, 3), 3);
        EXPECT_TRUE(r.connected());
        EXPECT_EQ(r.regular_degree(), 3);
        for (auto [u, v] : r.edges()) {
            EXPECT_NE(u, v);
        }
    }
}

TEST(HypergraphGeneratorTest, MatchingIsPerfect) {
    Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        int k = rng.between(2, 4);
        auto h = random_hypergraph(rng, k, rng.between(1, 4), rng.between(0, 6), 0.1);
        EXPECT_EQ(h.uniformity(), k);
        std::vector<int> covered(h.n, 0);
        for (int e : h.matching) {
            for (int v : h.edges[e]) {
                ++covered[v];
            }
        }
        for (int c : covered) {
            EXPECT_EQ(c, 1);
        }
        EXPECT_NO_THROW(matching_system(h));
    }
    auto m = random_permanent_matrix(rng, 5, 0.01);
    EXPECT_LE(std::abs(reference::permanent(m) - 1.0), 0.01 * 5 + 1e-3);
}

}  // namespace
}  // namespace wcount
