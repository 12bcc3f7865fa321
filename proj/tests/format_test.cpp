#include <cstdlib>
#include <limits>

#include "common.hpp"
#include "wcount/scalar.hpp"
#include "wcount/text_io.hpp"

namespace wcount {
namespace {

using testing::error_of;
using testing::instance_text;

TEST(GaussianRationalTest, ParsesDecimalsAndFractionsExactly) {
    auto a = GaussianRational::parse("0.1");
    EXPECT_EQ(a.real(), mpq_class(1, 10));
    auto b = GaussianRational::parse("-2.5e-3", "1/7");
    EXPECT_EQ(b.real(), mpq_class(-1, 400));
    EXPECT_EQ(b.imag(), mpq_class(1, 7));
    EXPECT_EQ(error_of([] { GaussianRational::parse("1.2.3"); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { GaussianRational::parse(""); }), ErrorKind::InvalidInput);
}

TEST(GaussianRationalTest, FieldArithmetic) {
    GaussianRational i(mpq_class(0), mpq_class(1));
    EXPECT_EQ(i * i, GaussianRational(-1));
    GaussianRational z(mpq_class(3), mpq_class(4));
    EXPECT_EQ(z / z, GaussianRational(1));
    EXPECT_EQ((z - z).is_zero(), true);
    EXPECT_EQ(GaussianRational::from_double(0.5).real(), mpq_class(1, 2));
}

TEST(GaussianRationalTest, ConvertsToNearestDouble) {
    EXPECT_EQ(nearest_double(mpq_class(101, 100)), 1.01);
    EXPECT_EQ(nearest_double(mpq_class(-1, 3)), -1.0 / 3.0);
    EXPECT_EQ(nearest_double(mpq_class(2, 3)), 2.0 / 3.0);
    EXPECT_EQ(GaussianRational::parse("0.1", "-0.7").to_complex(), Complex(0.1, -0.7));
    // Ties go to the even neighbor.
    mpq_class tie = mpq_class(1) + mpq_class(1) / (mpq_class(1) << 53);
    EXPECT_EQ(nearest_double(tie), 1.0);
}

TEST(WcountFormatTest, ReadsI1) {
    auto inst = testing::i1();
    EXPECT_EQ(inst.rows(), 1);
    EXPECT_EQ(inst.cols(), 2);
    EXPECT_EQ(inst.degree(), 2);
    EXPECT_EQ(inst.a.at(0, 0), 1);
    EXPECT_EQ(inst.a.at(0, 1), -1);
    EXPECT_EQ(inst.w[1], Complex(0.1, 0.0));
    EXPECT_EQ(inst.exact_weights()[0], GaussianRational::parse("0.1"));
}

TEST(WcountFormatTest, RejectsDuplicateAndZeroEntries) {
    auto dup = instance_text(1, 2, {{1, 1, 1}, {1, 1, 2}}, {1, 1}, "0.1");
    EXPECT_EQ(error_of([&] { parse_instance(dup); }), ErrorKind::InvalidInput);
    auto zero = instance_text(1, 2, {{1, 1, 0}, {1, 2, 1}}, {1, 1}, "0.1");
    EXPECT_EQ(error_of([&] { parse_instance(zero); }), ErrorKind::InvalidInput);
    auto range = instance_text(1, 2, {{1, 3, 1}}, {1, 1}, "0.1");
    EXPECT_EQ(error_of([&] { parse_instance(range); }), ErrorKind::InvalidInput);
    auto caps = instance_text(1, 2, {{1, 1, 1}}, {1, 0}, "0.1");
    EXPECT_EQ(error_of([&] { parse_instance(caps); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { parse_instance("WCOUNT v2\n"); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { parse_instance("WCOUNT v1\nmode integer\ndims 1 2\n"); }), ErrorKind::InvalidInput);
}

TEST(WcountFormatTest, WeightListAndComments) {
    auto text = "# comment\nWCOUNT v1\nmode integer\ndims 1 2\nnu 2 1\nweights list\n0.1 0\n0 0.2 # imaginary\n"
                "entries\n1 1 1\n1 2 -2\nend\n";
    auto inst = parse_weighted_instance(text);
    EXPECT_EQ(inst.nu, (std::vector<int>{2, 1}));
    EXPECT_EQ(inst.w[1], Complex(0.0, 0.2));
    EXPECT_EQ(inst.exact_weights()[1], GaussianRational::parse("0", "0.2"));
}

TEST(WcountFormatTest, RoundTripsBothModes) {
    auto inst = testing::i3("0.15");
    auto again = parse_weighted_instance(format_instance(inst));
    EXPECT_EQ(again.a, inst.a);
    EXPECT_EQ(again.nu, inst.nu);
    EXPECT_EQ(again.exact_weights(), inst.exact_weights());

    auto code = testing::code(3, 1, 2, {{1, 1, 1}, {1, 2, 2}}, "0.05");
    auto back = parse_modular_instance(format_instance(code));
    EXPECT_EQ(back.kappa, 3);
    EXPECT_EQ(back.a, code.a);
    EXPECT_EQ(back.exact_weights(), code.exact_weights());
    EXPECT_EQ(error_of([&] { parse_weighted_instance(format_instance(code)); }), ErrorKind::InvalidInput);
}

TEST(WcountFormatTest, ModularEntriesAreReduced) {
    auto code = testing::code(3, 1, 3, {{1, 1, 4}, {1, 2, 3}, {1, 3, -1}}, "0.1");
    EXPECT_EQ(code.a.at(0, 0), 1);
    EXPECT_EQ(code.a.at(0, 1), 0);
    EXPECT_EQ(code.a.at(0, 2), 2);
}

TEST(TextIoTest, Graphs) {
    auto g = parse_graph("vertices 4\n1 2\n2 3\n3 3\n");
    EXPECT_EQ(g.size(), 4);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.has_loop(2));
    EXPECT_FALSE(g.connected());
    EXPECT_EQ(g.degree(2), 2);
    auto again = parse_graph(format_graph(g));
    EXPECT_EQ(again.edges(), g.edges());
    EXPECT_EQ(again.size(), 4);
    EXPECT_EQ(error_of([] { parse_graph("1 2\n2 1\n"); }), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of([] { parse_graph("0 1\n"); }), ErrorKind::InvalidInput);
}

TEST(TextIoTest, Hypergraphs) {
    auto h = parse_hypergraph("vertices 4\nedges\n1 2\n2 3\n3 4\n4 1\nmatching\n1 3\n"
                              "weights\n1 0\n0.01 0\n1 0\n0.01 0\nend\n");
    EXPECT_EQ(h.n, 4);
    EXPECT_EQ(h.edge_count(), 4);
    EXPECT_EQ(h.matching, (std::vector<int>{0, 2}));
    EXPECT_EQ(h.a[1], Complex(0.01, 0.0));
    EXPECT_EQ(h.uniformity(), 2);
    auto again = parse_hypergraph(format_hypergraph(h));
    EXPECT_EQ(again.edges, h.edges);
    EXPECT_EQ(again.a, h.a);
    EXPECT_EQ(again.matching, h.matching);

    auto uniform = parse_hypergraph("edges\n1 2 3\nweights\nuniform 0.5 0\n");
    EXPECT_EQ(uniform.n, 3);
    EXPECT_EQ(uniform.a[0], Complex(0.5, 0.0));
    EXPECT_EQ(error_of([] { parse_hypergraph("edges\n1 1\n"); }), ErrorKind::InvalidInput);
}

TEST(TextIoTest, Matrices) {
    auto m = parse_matrix("2\n1 0.01,-0.5\n0.02 1\n");
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0][1], Complex(0.01, -0.5));
    EXPECT_EQ(parse_matrix(format_matrix(m)), m);
    EXPECT_EQ(error_of([] { parse_matrix("2\n1 2\n3\n"); }), ErrorKind::InvalidInput);
}

TEST(TextIoTest, ShortestDoubles) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
    const double tricky = 5e-324;
    EXPECT_EQ(std::strtod(format_double(tricky).c_str(), nullptr), tricky);
}

}  // namespace
}  // namespace wcount
