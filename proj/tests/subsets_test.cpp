#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "wcount/connected_subsets.hpp"
#include "wcount/generators.hpp"
#include "wcount/submatrix.hpp"
#include "wcount_checks/reference.hpp"

namespace wcount {
namespace {

using testing::error_of;
using Sets = std::vector<std::vector<int>>;

ColumnGraph from_graph(const Graph& g) {
    ColumnGraph cg;
    for (int v = 0; v < g.size(); ++v) {
        cg.adj.push_back(g.neighbors(v));
    }
    return cg;
}

TEST(ConnectedSubsetsTest, SmallCases) {
    auto path = column_graph(testing::i3().a);
    EXPECT_EQ(connected_subsets(path, 2), (Sets{{0}, {0, 1}, {1}, {1, 2}, {2}}));
    EXPECT_EQ(connected_subsets(path, 3), (Sets{{0}, {0, 1}, {0, 1, 2}, {1}, {1, 2}, {2}}));
    ColumnGraph empty;
    empty.adj.resize(3);
    EXPECT_EQ(connected_subsets(empty, 3), (Sets{{0}, {1}, {2}}));
    EXPECT_TRUE(connected_subsets(path, 0).empty());
}

TEST(ConnectedSubsetsTest, EachSetOnceWithItsSmallestVertexAsAnchor) {
    auto g = from_graph(complete_graph(5));
    for (int anchor = 0; anchor < 5; ++anchor) {
        int count = 0;
        for_each_connected_subset(g, 5, anchor, [&](std::span<const int> s) {
            ++count;
            EXPECT_EQ(*std::min_element(s.begin(), s.end()), anchor);
        });
        EXPECT_EQ(count, 1 << (4 - anchor));
    }
    EXPECT_EQ(connected_subsets(g, 5).size(), 31u);
}

TEST(ConnectedSubsetsTest, MatchesBruteForce) {
    Rng rng(43);
    for (int t = 0; t < 40; ++t) {
        auto g = from_graph(random_connected_graph(rng, rng.between(1, 14), rng.uniform(0.0, 0.5)));
        for (int k : {1, 2, 3, 4, 6, g.size()}) {
            EXPECT_EQ(connected_subsets(g, k), reference::connected_subsets(g.adj, k)) << "graph " << t << " k " << k;
        }
    }
}

TEST(ConnectedSubsetsTest, ContainingCountsAddUp) {
    Rng rng(47);
    for (int t = 0; t < 20; ++t) {
        auto g = from_graph(random_connected_graph(rng, rng.between(2, 12), 0.3));
        for (int k = 1; k <= 5; ++k) {
            auto counts = containing_counts(g, k);
            uint64_t sum = 0;
            for (auto c : counts) {
                sum += c;
            }
            uint64_t sets = 0;
            for (const auto& s : connected_subsets(g, k)) {
                sets += static_cast<int>(s.size()) == k ? 1 : 0;
            }
            EXPECT_EQ(sum, sets * static_cast<uint64_t>(k));
        }
    }
}

TEST(ConnectedSubsetsTest, BoundHoldsOnPathsAndCliques) {
    EXPECT_DOUBLE_EQ(connected_subset_bound(2.0, 2), std::exp(1.0) * 2.0 / 2.0);
    auto cycle = from_graph(cycle_graph(12));
    auto clique = from_graph(complete_graph(9));
    for (int k = 2; k <= 6; ++k) {
        for (auto c : containing_counts(cycle, k)) {
            EXPECT_LE(static_cast<double>(c), connected_subset_bound(2.0, k));
            EXPECT_EQ(c, static_cast<uint64_t>(k));
        }
        for (auto c : containing_counts(clique, k)) {
            EXPECT_LE(static_cast<double>(c), connected_subset_bound(8.0, k));
        }
    }
}

TEST(ConnectedSubsetsTest, ConnectivityCheck) {
    auto path = column_graph(testing::i3().a);
    std::vector<int> ends{0, 2};
    std::vector<int> all{0, 1, 2};
    EXPECT_FALSE(is_connected_subset(path, ends));
    EXPECT_TRUE(is_connected_subset(path, all));
}

SubMatrix sub(std::vector<Triplet> t) { return SubMatrix(std::move(t)); }

TEST(SubMatrixTest, InducedSubmatrices) {
    auto a3 = testing::i3().a;
    std::vector<int> c01{0, 1};
    auto b = induced_submatrix(a3, c01);
    EXPECT_EQ(b.rows(), (std::vector<int>{0, 1}));
    EXPECT_EQ(b.at(0, 0), 1);
    EXPECT_EQ(b.at(0, 1), -1);
    EXPECT_EQ(b.at(1, 1), 1);
    EXPECT_EQ(b.at(1, 0), 0);
    std::vector<int> c012{0, 1, 2};
    EXPECT_EQ(induced_submatrix(a3, c012).entries().size(), a3.nonzeros());
    auto blocks = testing::i1_twice().a;
    auto first = induced_submatrix(blocks, c01);
    EXPECT_EQ(first.rows(), (std::vector<int>{0}));
    EXPECT_TRUE(first.connected());
    std::vector<int> split{0, 2};
    EXPECT_FALSE(induced_submatrix(blocks, split).connected());
}

TEST(SubMatrixTest, CompatibilityAndConnectedSums) {
    EXPECT_TRUE(compatible(sub({{0, 0, 1}}), sub({{0, 1, -1}})));
    auto a3 = testing::i3().a;
    std::vector<int> c01{0, 1};
    std::vector<int> c12{1, 2};
    auto left = induced_submatrix(a3, c01);
    auto right = induced_submatrix(a3, c12);
    EXPECT_TRUE(compatible(left, right));
    std::vector<int> c012{0, 1, 2};
    EXPECT_EQ(connected_sum(left, right), induced_submatrix(a3, c012));
    EXPECT_EQ(connected_sum(left, left), left);
    EXPECT_FALSE(compatible(sub({{0, 0, 1}}), sub({{0, 0, 2}})));
    EXPECT_EQ(error_of([] { connected_sum(sub({{0, 0, 1}}), sub({{0, 0, 2}})); }), ErrorKind::IncompatibleInputs);

    auto disjoint = connected_sum(sub({{0, 0, 1}, {0, 1, -1}}), sub({{1, 2, 1}, {1, 3, -1}}));
    EXPECT_FALSE(disjoint.connected());
    EXPECT_EQ(disjoint.entries().size(), 4u);
}

TEST(SubMatrixTest, LambdaValues) {
    auto inst = testing::i1();
    std::vector<int> c01{0, 1};
    auto full = induced_submatrix(inst.a, c01);
    auto w = inst.exact_weights();
    auto lambda = lambda_values(full, w, inst.nu, 3);
    EXPECT_EQ(lambda[1], GaussianRational(0));
    EXPECT_EQ(lambda[2], GaussianRational::parse("0.01"));
    EXPECT_EQ(lambda[3], GaussianRational(0));

    auto i3 = testing::i3();
    auto left = induced_submatrix(i3.a, c01);
    auto l3 = lambda_values(left, i3.exact_weights(), i3.nu, 3);
    EXPECT_TRUE(l3[2].is_zero());
    EXPECT_TRUE(l3[3].is_zero());
}

}  // namespace
}  // namespace wcount
