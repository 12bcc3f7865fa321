#ifndef WCOUNT_REDUCTIONS_HPP
#define WCOUNT_REDUCTIONS_HPP

#include <optional>
#include <vector>

#include "wcount/graph.hpp"
#include "wcount/instance.hpp"
#include "wcount/interpolation.hpp"
#include "wcount/scalar.hpp"
#include "wcount/sparse_matrix.hpp"

// Encodings of combinatorial sums as weighted 0-1 systems: Hamming
// distance sums around a feasible point, weighted perfect matchings of
// hypergraphs (permanents in the bipartite case) and graph homomorphisms.

namespace wcount {

/// `Ax = b` over 0-1 vectors with a known solution `y`.
struct AffineSystem {
    SparseMatrix a;
    std::vector<long> b;
    std::vector<int> y;

    AffineSystem() = default;
    /// Throws `Error(InfeasibleWitness)` unless y is a 0-1 vector with Ay = b.
    AffineSystem(SparseMatrix matrix, std::vector<long> rhs, std::vector<int> witness);
};

/**
 * Homogeneous system for z = x - y: column j is negated where y_j = 1, caps are 1.
 * Its weight is the sum over solutions x of prod_{j: x_j != y_j} w_j.
 */
WeightedInstance affine_shift(const AffineSystem& sys, std::vector<Complex> w,
                              std::optional<std::vector<GaussianRational>> exact = std::nullopt);

/// Approximates the sum over solutions x of omega^{dist(x, y)}.
ApproxReport hamming_sum(const AffineSystem& sys, Complex omega, const ApproxOptions& options = {});

/// Hypergraph on vertices 0..n-1 with edge weights and an optional perfect matching (edge indices).
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;
    std::vector<Complex> a;
    std::vector<int> matching;

    Hypergraph() = default;
    /// Sorts each edge; rejects empty edges, repeated vertices and out-of-range vertices.
    Hypergraph(int vertices, std::vector<std::vector<int>> edge_list, std::vector<Complex> weights,
               std::vector<int> perfect_matching = {});

    int edge_count() const { return static_cast<int>(edges.size()); }
    /// Common edge size, or nullopt when sizes differ.
    std::optional<int> uniformity() const;
    int max_degree() const;
    /// Max edge size.
    int rank() const;
};

/// One equation per vertex, one variable per edge; y is the indicator of the matching.
AffineSystem matching_system(const Hypergraph& h);

struct RescaledHypergraph {
    Hypergraph h;       ///< weights equal to 1 on the matching
    Complex factor;     ///< P_H(A) = factor * P_h(a)
};

/**
 * For each matching edge e and v in e, alpha_v is the principal k-th root of a_e.
 * Every weight is divided by the alpha_v of its vertices.
 * Throws `Error(ZeroWeightOnMatching)` or `Error(InvalidInput)` for non-uniform input.
 */
RescaledHypergraph rescale_edge_weights(const Hypergraph& h);

/// omega = beta / (d sqrt(k)) with d >= 2.
double default_matching_omega(const Hypergraph& h);

struct MatchingOptions {
    ApproxOptions approx;
    std::optional<Complex> omega;
};

/// Approximates the sum over perfect matchings M of prod_{e in M} a_e.
ApproxReport matching_weight(const Hypergraph& h, const MatchingOptions& options = {});

/// Bipartite graph of a square matrix: rows 0..n-1, columns n..2n-1, the diagonal as matching.
Hypergraph permanent_hypergraph(const std::vector<std::vector<Complex>>& m);

/// Approximates per(m); needs a nonzero diagonal.
ApproxReport permanent_weight(const std::vector<std::vector<Complex>>& m, const MatchingOptions& options = {});

struct HomInput {
    Graph g1;
    Graph g2;
    int anchor = 0;
    int target = 0;
    std::optional<std::vector<int>> phi;
    /// When false the anchor image is free and one edge is normalized instead.
    bool anchored = true;
};

/// Variable x^{uv}_{ij}: the edge u < v of G1 maps to the ordered pair (i, j).
struct HomVariable {
    int u;
    int v;
    int i;
    int j;
};

struct HomSystem {
    SparseMatrix a;
    std::vector<long> b;
    std::vector<HomVariable> vars;
    std::optional<std::vector<int>> y;  ///< encoding of phi when given
    long degree_bound = 0;              ///< 2 |E1|

    /// Throws `Error(InvalidInput)` when no homomorphism was supplied.
    AffineSystem affine() const;
};

bool is_homomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& phi);

/**
 * Encode homomorphisms G1 -> G2 as 0-1 solutions. Neighbors are chained in
 * ascending order with the anchor first. Throws `Error(NotAHomomorphism)`
 * for a bad phi and `Error(InvalidInput)` for disconnected graphs or bad anchors.
 */
HomSystem hom_system(const HomInput& inp);

/// The homomorphism picked out by a 0-1 solution.
std::vector<int> decode_hom(const HomSystem& sys, const std::vector<int>& x, int vertices);

/// Approximates the sum over homomorphisms psi of omega^{2 dist(phi, psi)}.
ApproxReport hom_sum(const HomInput& inp, Complex omega, const ApproxOptions& options = {});

/**
 * Target graph with vertices {0, 1}, an edge 0-1 and a loop at 1, phi constant 1.
 * hom_sum with omega then equals the independence polynomial at omega^{2d}.
 * Throws `Error(InvalidInput)` unless g is regular, connected and has at least one edge.
 */
HomInput independence_instance(const Graph& g);

}  // namespace wcount

#endif
