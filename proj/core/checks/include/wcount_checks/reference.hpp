#ifndef WCOUNT_CHECKS_REFERENCE_HPP
#define WCOUNT_CHECKS_REFERENCE_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "wcount/graph.hpp"
#include "wcount/instance.hpp"
#include "wcount/reductions.hpp"
#include "wcount/scalar.hpp"
#include "wcount/sparse_matrix.hpp"

// Deliberately naive implementations used as ground truth by the tests and
// the acceptance runners. None of them shares code with the algorithms they check.

namespace wcount::reference {

/// Column adjacency by testing every pair of columns against every row.
std::vector<std::vector<int>> column_graph_pairs(const SparseMatrix& a);

/// Every subset of size 1..k (bitmask scan) kept when a flood fill reaches all of it.
std::vector<std::vector<int>> connected_subsets(const std::vector<std::vector<int>>& adj, int k);

/// All points of the box with Ax = 0 by odometer over the whole box.
std::vector<std::vector<int>> box_points(const WeightedInstance& inst);

/// pi_0..pi_s by the odometer above, exact.
std::vector<GaussianRational> pi_exact(const WeightedInstance& inst, int s);

/// sigma_1..sigma_k from pi by the Newton recursion, exact.
std::vector<GaussianRational> sigma_exact(const WeightedInstance& inst, int k);

/// Instance on a column subset: those columns and every row nonzero on them.
WeightedInstance column_restriction(const WeightedInstance& inst, const std::vector<int>& cols);

/// mu_k(C) by inclusion-exclusion of sigma_k over the subsets of C.
std::vector<GaussianRational> mu_inclusion_exclusion(const WeightedInstance& inst, const std::vector<int>& cols,
                                                     int k);

/// Codewords of a modular system by odometer over (Z/kappa)^n.
std::vector<std::vector<int>> modular_codewords(const ModularInstance& inst);

/// Weight distribution of the span of the rows of `a` over F_p, by summing every coefficient vector.
std::vector<mpz_class> row_space_enumerator(const SparseMatrix& a, int p);

/// Sum over permutations.
Complex permanent(const std::vector<std::vector<Complex>>& m);

/// Sum over edge subsets forming a perfect matching of the product of their weights.
Complex matching_sum(const Hypergraph& h);

/// Every map V1 -> V2 preserving edges, optionally with the anchor condition.
std::vector<std::vector<int>> homomorphisms(const Graph& g1, const Graph& g2, int anchor = -1, int target = -1);

/// Sum over homomorphisms psi with psi(anchor) = target (unless anchor < 0) of omega^{2 d(phi, psi)},
/// d counting edges of G1 whose image pair differs.
Complex hom_distance_sum(const Graph& g1, const Graph& g2, const std::vector<int>& phi, Complex omega,
                         int anchor = -1, int target = -1);

/// Independence polynomial evaluated at lambda.
Complex independence_polynomial(const Graph& g, Complex lambda);

/// Number of 0-1 vectors x with Ax = b.
uint64_t count_01_solutions(const SparseMatrix& a, const std::vector<long>& b);

/// Sum over 0-1 solutions of Ax = b of prod_{j: x_j != y_j} w_j.
Complex hamming_weight_sum(const SparseMatrix& a, const std::vector<long>& b, const std::vector<int>& y,
                           const std::vector<Complex>& w);

}  // namespace wcount::reference

#endif
