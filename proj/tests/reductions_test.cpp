#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "wcount/generators.hpp"
#include "wcount/oracle.hpp"
#include "wcount/reductions.hpp"
#include "wcount_checks/reference.hpp"

namespace wcount {
namespace {

using testing::error_of;

AffineSystem one_pair(std::vector<int> y) { return AffineSystem(SparseMatrix(1, 2, {{0, 0, 1}, {0, 1, -1}}), {0}, y); }

TEST(AffineShiftTest, NegatesWitnessColumns) {
    auto inst = affine_shift(one_pair({1, 1}), {0.1, 0.1});
    EXPECT_EQ(inst.a, SparseMatrix(1, 2, {{0, 0, -1}, {0, 1, 1}}));
    EXPECT_EQ(inst.nu, (std::vector<int>{1, 1}));
    EXPECT_CNEAR(exact_w(inst), 1.01, 1e-15);
    auto identity = affine_shift(one_pair({0, 0}), {0.1, 0.1});
    EXPECT_EQ(identity.a, one_pair({0, 0}).a);
    EXPECT_EQ(error_of([] { one_pair({1, 0}); }), ErrorKind::InfeasibleWitness);
    EXPECT_EQ(error_of([] { one_pair({2, 2}); }), ErrorKind::InfeasibleWitness);
}

AffineSystem random_system(Rng& rng, int n, int m) {
    std::vector<int> y(n);
    for (auto& v : y) {
        v = rng.coin() ? 1 : 0;
    }
    std::vector<Triplet> t;
    std::vector<long> b(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (rng.below(3) == 0) {
                int v = rng.coin() ? 1 : -1;
                t.push_back({i, j, v});
                b[i] += v * y[j];
            }
        }
    }
    return AffineSystem(SparseMatrix(m, n, t), b, y);
}

TEST(AffineShiftTest, PreservesTheSolutionCountAndWeights) {
    Rng rng(107);
    for (int t = 0; t < 30; ++t) {
        auto sys = random_system(rng, rng.between(1, 10), rng.between(1, 5));
        std::vector<Complex> w(sys.a.cols());
        for (auto& v : w) {
            v = rng.uniform(0.0, 0.3) * rng.phase();
        }
        auto inst = affine_shift(sys, w);
        EXPECT_EQ(collect_points(inst, std::nullopt).size(), reference::count_01_solutions(sys.a, sys.b));
        EXPECT_LE(testing::scaled_gap(exact_w(inst), reference::hamming_weight_sum(sys.a, sys.b, sys.y, w)), 1e-13);
    }
}

TEST(HammingSumTest, SmallCases) {
    EXPECT_LE(testing::log_gap(hamming_sum(one_pair({1, 1}), 0.1).value, 1.01), 1e-3);
    EXPECT_CNEAR(hamming_sum(one_pair({1, 1}), 0.0).value, 1.0, 0.0);
    AffineSystem twice(SparseMatrix(2, 4, {{0, 0, 1}, {0, 1, -1}, {1, 2, 1}, {1, 3, -1}}), {0, 0}, {1, 1, 0, 0});
    EXPECT_LE(testing::log_gap(hamming_sum(twice, 0.1).value, 1.0201), 1e-3);
}

TEST(HammingSumTest, MatchesBruteForce) {
    Rng rng(109);
    for (int t = 0; t < 20; ++t) {
        auto sys = random_system(rng, rng.between(2, 14), rng.between(1, 6));
        auto st = sparsity(sys.a);
        if (st.r == 0) {
            continue;
        }
        Complex omega = kBeta / (std::max(st.r, 2) * std::sqrt(double(std::max(st.c, 1)))) * rng.phase();
        std::vector<Complex> w(sys.a.cols(), omega);
        auto want = reference::hamming_weight_sum(sys.a, sys.b, sys.y, w);
        EXPECT_LE(testing::log_gap(hamming_sum(sys, omega).value, want), 1e-3) << "system " << t;
    }
}

Hypergraph four_cycle(Complex off) {
    return Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1.0, off, 1.0, off}, {0, 2});
}

TEST(MatchingSystemTest, Incidence) {
    auto sys = matching_system(four_cycle(0.01));
    EXPECT_EQ(sys.a.rows(), 4);
    EXPECT_EQ(sys.a.cols(), 4);
    EXPECT_EQ(sys.y, (std::vector<int>{1, 0, 1, 0}));
    EXPECT_EQ(sys.b, (std::vector<long>{1, 1, 1, 1}));
    auto st = sparsity(sys.a);
    EXPECT_EQ(st.r, 2);
    EXPECT_EQ(st.c, 2);
    auto k2 = matching_system(Hypergraph(2, {{0, 1}}, {1.0}, {0}));
    EXPECT_EQ(k2.a.rows(), 2);
    EXPECT_EQ(k2.a.cols(), 1);
    EXPECT_EQ(k2.y, (std::vector<int>{1}));
    EXPECT_EQ(error_of([] { matching_system(Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}}, {1.0, 1.0, 1.0}, {1})); }),
              ErrorKind::InfeasibleWitness);
}

TEST(HypergraphTest, Validation) {
    Hypergraph h(3, {{2, 0, 1}}, {1.0});
    EXPECT_EQ(h.edges[0], (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(h.uniformity(), 3);
    EXPECT_EQ(error_of([] { Hypergraph(2, {{0, 0}}, {1.0}); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { Hypergraph(2, {{0, 2}}, {1.0}); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { Hypergraph(2, {{}}, {1.0}); }), ErrorKind::InvalidInput);
    Hypergraph mixed(3, {{0, 1}, {0, 1, 2}}, {1.0, 1.0});
    EXPECT_FALSE(mixed.uniformity().has_value());
    EXPECT_EQ(mixed.rank(), 3);
    EXPECT_EQ(mixed.max_degree(), 2);
}

TEST(RescaleTest, PrincipalRoots) {
    auto single = rescale_edge_weights(Hypergraph(2, {{0, 1}}, {4.0}, {0}));
    EXPECT_CNEAR(single.factor, 4.0, 1e-15);
    EXPECT_CNEAR(single.h.a[0], 1.0, 1e-15);
    auto same = rescale_edge_weights(four_cycle(1.0));
    EXPECT_CNEAR(same.factor, 1.0, 0.0);
    for (auto a : same.h.a) {
        EXPECT_CNEAR(a, 1.0, 0.0);
    }
    EXPECT_EQ(error_of([] { rescale_edge_weights(Hypergraph(2, {{0, 1}}, {0.0}, {0})); }),
              ErrorKind::ZeroWeightOnMatching);
}

TEST(RescaleTest, PreservesTheMatchingSum) {
    Rng rng(113);
    for (int t = 0; t < 20; ++t) {
        auto h = random_hypergraph(rng, rng.between(2, 3), rng.between(1, 3), rng.between(0, 5), 0.5);
        auto r = rescale_edge_weights(h);
        for (int e : r.h.matching) {
            EXPECT_CNEAR(r.h.a[e], 1.0, 1e-13);
        }
        EXPECT_LE(testing::scaled_gap(r.factor * reference::matching_sum(r.h), reference::matching_sum(h)), 1e-12);
    }
}

TEST(MatchingWeightTest, SmallCases) {
    EXPECT_LE(testing::log_gap(matching_weight(four_cycle(0.01)).value, 1.0001), 1e-3);
    auto disjoint = matching_weight(Hypergraph(4, {{0, 1}, {2, 3}}, {1.0, 1.0}, {0, 1}));
    EXPECT_CNEAR(disjoint.value, 1.0, 1e-15);
    EXPECT_NEAR(default_matching_omega(four_cycle(0.01)), kBeta / (2.0 * std::sqrt(2.0)), 1e-15);
    std::vector<std::vector<Complex>> m{{1.0, 0.01}, {0.01, 1.0}};
    EXPECT_LE(testing::log_gap(permanent_weight(m).value, 1.0001), 1e-3);
    EXPECT_EQ(permanent_hypergraph(m).edge_count(), 4);
}

TEST(MatchingWeightTest, MatchesBruteForce) {
    Rng rng(127);
    for (int t = 0; t < 20; ++t) {
        int k = rng.between(2, 3);
        auto h = random_hypergraph(rng, k, rng.between(1, 3), rng.between(0, 8), 1.0);
        double d = std::max(h.max_degree(), 2);
        double cap = 0.4 * kBeta * kBeta / (d * d * k);
        for (int e = 0; e < h.edge_count(); ++e) {
            if (std::find(h.matching.begin(), h.matching.end(), e) == h.matching.end()) {
                h.a[e] *= cap;
            }
        }
        EXPECT_LE(testing::log_gap(matching_weight(h).value, reference::matching_sum(h)), 1e-3) << "hypergraph " << t;
    }
    for (int t = 0; t < 10; ++t) {
        auto m = random_permanent_matrix(rng, rng.between(1, 6), 0.01);
        EXPECT_LE(testing::log_gap(permanent_weight(m).value, reference::permanent(m)), 1e-3);
    }
}

HomInput edge_to_k3() {
    HomInput inp;
    inp.g1 = path_graph(2);
    inp.g2 = complete_graph(3);
    inp.anchor = 0;
    inp.target = 2;
    inp.phi = std::vector<int>{2, 0};
    return inp;
}

TEST(HomSystemTest, EdgeIntoATriangle) {
    auto sys = hom_system(edge_to_k3());
    EXPECT_EQ(sys.vars.size(), 6u);
    EXPECT_EQ(sys.degree_bound, 2);
    EXPECT_EQ(reference::count_01_solutions(sys.a, sys.b), 2u);
    ASSERT_TRUE(sys.y.has_value());
    EXPECT_EQ(decode_hom(sys, *sys.y, 2), (std::vector<int>{2, 0}));
}

TEST(HomSystemTest, LoopedTarget) {
    HomInput inp;
    inp.g1 = path_graph(2);
    inp.g2 = Graph(1, {{0, 0}});
    inp.phi = std::vector<int>{0, 0};
    auto sys = hom_system(inp);
    EXPECT_EQ(sys.vars.size(), 1u);
    EXPECT_EQ(reference::count_01_solutions(sys.a, sys.b), 1u);
    EXPECT_EQ(sys.y, (std::vector<int>{1}));
}

TEST(HomSystemTest, RejectsBadMaps) {
    auto inp = edge_to_k3();
    inp.phi = std::vector<int>{2, 2};
    EXPECT_EQ(error_of([&] { hom_system(inp); }), ErrorKind::NotAHomomorphism);
    inp.phi = std::vector<int>{1, 0};
    EXPECT_EQ(error_of([&] { hom_system(inp); }), ErrorKind::NotAHomomorphism);
    auto bad_anchor = edge_to_k3();
    bad_anchor.anchor = 5;
    EXPECT_EQ(error_of([&] { hom_system(bad_anchor); }), ErrorKind::InvalidInput);
    EXPECT_TRUE(is_homomorphism(path_graph(2), complete_graph(3), {2, 0}));
    EXPECT_FALSE(is_homomorphism(path_graph(2), complete_graph(3), {0, 0}));
}

TEST(HomSystemTest, SolutionsAreHomomorphisms) {
    Rng rng(131);
    for (int t = 0; t < 60; ++t) {
        HomInput inp;
        inp.g1 = random_connected_graph(rng, rng.between(2, 5), 0.3);
        inp.g2 = random_connected_graph(rng, rng.between(1, 4), 0.4, 0.3);
        if (inp.g2.edges().empty()) {
            continue;
        }
        inp.anchor = rng.between(0, inp.g1.size() - 1);
        inp.target = rng.between(0, inp.g2.size() - 1);
        inp.anchored = t % 3 != 0 || inp.g1.edges().size() > 5;
        auto sys = hom_system(inp);
        auto homs = inp.anchored ? reference::homomorphisms(inp.g1, inp.g2, inp.anchor, inp.target)
                                 : reference::homomorphisms(inp.g1, inp.g2);
        if (inp.anchored) {
            EXPECT_EQ(reference::count_01_solutions(sys.a, sys.b), homs.size()) << "graphs " << t;
            auto st = sparsity(sys.a);
            EXPECT_LE(st.r, 2 * inp.g2.max_degree());
            EXPECT_LE(st.c, 4);
        } else {
            EXPECT_EQ(reference::count_01_solutions(sys.a, sys.b), homs.size()) << "graphs " << t;
        }
    }
}

TEST(HomSumTest, SmallCases) {
    auto inp = edge_to_k3();
    EXPECT_LE(testing::log_gap(hom_sum(inp, 0.02).value, 1.0004), 1e-3);
    EXPECT_CNEAR(hom_sum(inp, 0.0).value, 1.0, 0.0);
}

TEST(HomSumTest, PathIntoATriangle) {
    HomInput inp;
    inp.g1 = path_graph(3);
    inp.g2 = complete_graph(3);
    inp.anchor = 0;
    inp.target = 0;
    inp.phi = std::vector<int>{0, 1, 0};
    auto want = reference::hom_distance_sum(inp.g1, inp.g2, *inp.phi, 0.02, 0, 0);
    EXPECT_LE(testing::log_gap(hom_sum(inp, 0.02).value, want), 1e-3);
}

TEST(IndependenceTest, SmallGraphs) {
    const double omega = 0.02;
    auto k2 = independence_instance(path_graph(2));
    EXPECT_LE(testing::log_gap(hom_sum(k2, omega).value, 1.0 + 2.0 * omega * omega), 1e-3);
    EXPECT_CNEAR(hom_sum(k2, 0.0).value, 1.0, 0.0);
    auto c4 = cycle_graph(4);
    double lambda = std::pow(omega, 4);
    EXPECT_LE(testing::log_gap(hom_sum(independence_instance(c4), omega).value, 1.0 + 4.0 * lambda + 2.0 * lambda * lambda),
              1e-3);
    EXPECT_NEAR(reference::independence_polynomial(c4, 0.5).real(), 1.0 + 2.0 + 0.5, 1e-15);
    EXPECT_EQ(error_of([] { independence_instance(path_graph(3)); }), ErrorKind::InvalidInput);
}

}  // namespace
}  // namespace wcount
