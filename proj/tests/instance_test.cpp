#include "common.hpp"
#include "wcount/generators.hpp"
#include "wcount/oracle.hpp"
#include "wcount/sparse_matrix.hpp"
#include "wcount_checks/reference.hpp"

namespace wcount {
namespace {

using testing::error_of;

TEST(SparseMatrixTest, RowAndColumnViewsAgree) {
    SparseMatrix a(3, 4, {{0, 1, 2}, {2, 3, -1}, {1, 1, 5}, {0, 0, 1}});
    EXPECT_EQ(a.nonzeros(), 4u);
    ASSERT_EQ(a.col(1).size(), 2u);
    EXPECT_EQ(a.col(1)[0].index, 0);
    EXPECT_EQ(a.col(1)[1].index, 1);
    EXPECT_EQ(a.row(0)[0].index, 0);
    EXPECT_EQ(a.at(1, 1), 5);
    EXPECT_EQ(a.at(1, 2), 0);
    EXPECT_EQ(error_of([] { SparseMatrix(1, 1, {{0, 0, 1}, {0, 0, 2}}); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { SparseMatrix(1, 1, {{0, 0, 0}}); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { SparseMatrix(1, 1, {{1, 0, 1}}); }), ErrorKind::InvalidInput);
}

TEST(SparseMatrixTest, LookupMatchesDenseScanOnRandomMatrices) {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        int m = rng.between(1, 8);
        int n = rng.between(1, 8);
        std::vector<std::vector<long>> dense(m, std::vector<long>(n, 0));
        std::vector<Triplet> entries;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                if (rng.coin()) {
                    dense[i][j] = rng.between(-3, 3);
                    if (dense[i][j] != 0) {
                        entries.push_back({i, j, dense[i][j]});
                    }
                }
            }
        }
        rng.shuffle(entries);
        SparseMatrix a(m, n, entries);
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows;
            for (int i = 0; i < m; ++i) {
                if (dense[i][j] != 0) {
                    rows.push_back(i);
                }
                EXPECT_EQ(a.at(i, j), dense[i][j]);
            }
            std::vector<int> got;
            for (const auto& e : a.col(j)) {
                got.push_back(e.index);
            }
            EXPECT_EQ(got, rows);
        }
    }
}

TEST(NormalizeTest, I1IsAFixedPoint) {
    auto r = normalize(testing::i1());
    EXPECT_EQ(r.instance.a, testing::i1().a);
    EXPECT_TRUE(r.factor.empty());
    EXPECT_EQ(r.kept_columns, (std::vector<int>{0, 1}));
}

TEST(NormalizeTest, ZeroColumnBecomesAFactor) {
    auto inst = parse_weighted_instance(
        testing::instance_text(2, 2, {{1, 1, 1}, {2, 1, -1}}, {1, 1}, "0.1"));
    auto r = normalize(inst);
    EXPECT_EQ(r.instance.cols(), 1);
    EXPECT_EQ(r.instance.rows(), 2);
    ASSERT_EQ(r.factor.removed.size(), 1u);
    EXPECT_EQ(r.factor.removed[0].column, 1);
    auto poly = r.factor.polynomial();
    ASSERT_EQ(poly.size(), 2u);
    EXPECT_CNEAR(poly[0], 1.0, 1e-15);
    EXPECT_CNEAR(poly[1], 0.1, 1e-15);
    EXPECT_CNEAR(r.factor.evaluate(2.0), 1.2, 1e-15);
}

TEST(NormalizeTest, AllZeroRowsGiveTheWholeBox) {
    WeightedInstance inst(SparseMatrix(2, 3, {}), {0.1, 0.2, 0.3}, {1, 2, 1});
    auto r = normalize(inst);
    EXPECT_EQ(r.instance.rows(), 0);
    EXPECT_EQ(r.instance.cols(), 0);
    EXPECT_EQ(r.factor.degree(), 4);
    // Brute force over the full box.
    Complex z(0.7, -0.4);
    Complex box = 0.0;
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 2; ++b) {
            for (int c = 0; c <= 1; ++c) {
                box += std::pow(0.1 * z, a) * std::pow(0.2 * z, b) * std::pow(0.3 * z, c);
            }
        }
    }
    EXPECT_CNEAR(r.factor.evaluate(z), box, 1e-14);
    EXPECT_CNEAR(exact_w(inst), r.factor.evaluate(1.0), 1e-14);
}

TEST(NormalizeTest, IsIdempotent) {
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        InstanceParams p;
        p.n = rng.between(2, 10);
        p.m = rng.between(1, 8);
        auto once = normalize(random_instance(rng, p));
        auto twice = normalize(once.instance);
        EXPECT_EQ(twice.instance.a, once.instance.a);
        EXPECT_TRUE(twice.factor.empty());
    }
}

TEST(PrepareTest, SingleEntryRowsForceZeros) {
    // Row 2 pins x_2 = 0, which then leaves x_1 alone in row 1.
    auto inst = parse_weighted_instance(
        testing::instance_text(3, 3, {{1, 1, 1}, {1, 2, -1}, {2, 2, 1}, {3, 3, 1}, {3, 1, -1}}, {1, 1, 1}, "0.1"));
    auto r = prepare(inst);
    EXPECT_EQ(r.instance.cols(), 0);
    EXPECT_CNEAR(r.factor.evaluate(1.0), 1.0, 0.0);
    EXPECT_CNEAR(exact_w(inst), 1.0, 0.0);
}

TEST(PrepareTest, PreservesTheWeightPolynomial) {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        InstanceParams p;
        p.n = rng.between(2, 9);
        p.m = rng.between(1, 7);
        p.r = rng.between(2, 3);
        auto inst = random_instance(rng, p);
        auto r = prepare(inst);
        Complex z(0.9, 0.3);
        Complex direct = 0.0;
        auto full = w_polynomial(inst);
        for (size_t k = full.size(); k-- > 0;) {
            direct = direct * z + full[k].to_complex();
        }
        Complex reduced = 0.0;
        if (r.instance.cols() > 0) {
            auto part = w_polynomial(r.instance);
            for (size_t k = part.size(); k-- > 0;) {
                reduced = reduced * z + part[k].to_complex();
            }
        } else {
            reduced = 1.0;
        }
        EXPECT_LE(testing::scaled_gap(reduced * r.factor.evaluate(z), direct), 1e-12) << "instance " << t;
    }
}

TEST(SparsityTest, CountsEntries) {
    auto s1 = sparsity(testing::i1().a);
    EXPECT_EQ(s1.r, 2);
    EXPECT_EQ(s1.c, 1);
    EXPECT_EQ(s1.d, 2);
    auto s3 = sparsity(testing::i3().a);
    EXPECT_EQ(s3.r, 2);
    EXPECT_EQ(s3.c, 2);
    EXPECT_EQ(s3.d, 4);
    auto s11 = sparsity(testing::i1_twice().a);
    EXPECT_EQ(s11.r, 2);
    EXPECT_EQ(s11.c, 1);
}

TEST(WeightBoundTest, ThresholdsAndMargins) {
    auto ok = weight_bound_check(testing::i1(), kBeta);
    EXPECT_DOUBLE_EQ(ok.threshold, 0.225);
    EXPECT_TRUE(ok.pass);

    auto inst = testing::i1();
    inst.w[0] = 0.3;
    auto bad = weight_bound_check(inst, kBeta);
    EXPECT_FALSE(bad.pass);
    EXPECT_NEAR(bad.margin, -0.075, 1e-15);

    auto zero = testing::i1("0");
    auto z = weight_bound_check(zero, kBeta);
    EXPECT_TRUE(z.pass);
    EXPECT_DOUBLE_EQ(z.margin, z.threshold);

    auto code = testing::code(3, 1, 2, {{1, 1, 1}, {1, 2, 2}}, "0.1");
    EXPECT_DOUBLE_EQ(weight_bound_check(code, kBeta).threshold, 0.1125);
}

TEST(ColumnGraphTest, SmallCases) {
    auto g3 = column_graph(testing::i3().a);
    EXPECT_EQ(g3.adj, (std::vector<std::vector<int>>{{1}, {0, 2}, {1}}));
    auto g11 = column_graph(testing::i1_twice().a);
    EXPECT_EQ(g11.adj, (std::vector<std::vector<int>>{{1}, {0}, {3}, {2}}));
    EXPECT_EQ(g11.edge_count(), 2u);
    auto single = column_graph(SparseMatrix(2, 1, {{0, 0, 1}, {1, 0, 2}}));
    EXPECT_EQ(single.adj, (std::vector<std::vector<int>>{{}}));
}

TEST(ColumnGraphTest, MatchesPairwiseScanAndDegreeBound) {
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        InstanceParams p;
        p.n = rng.between(2, 14);
        p.m = rng.between(1, 10);
        auto inst = random_instance(rng, p);
        auto g = column_graph(inst.a);
        EXPECT_EQ(g.adj, reference::column_graph_pairs(inst.a));
        EXPECT_LE(static_cast<long>(g.max_degree()), sparsity(inst.a).d);
    }
}

}  // namespace
}  // namespace wcount
