#ifndef WCOUNT_CODES_HPP
#define WCOUNT_CODES_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "wcount/graph.hpp"
#include "wcount/instance.hpp"
#include "wcount/oracle.hpp"
#include "wcount/scalar.hpp"

// Solution sets of `Ax = 0 (mod kappa)`: weights, weight enumerators and
// the MacWilliams transform.
//
// For a code X (the solutions) and its dual C (the row space of A over F_p),
//
//     p_X(z) = p^{-dim C} (1 + (p - 1) z)^n p_C((1 - z) / (1 + (p - 1) z)).

namespace wcount {

/// Call `visit(x, support)` for every solution; `support` counts nonzero coordinates.
void modular_enumerate(const ModularInstance& inst, const std::function<void(std::span<const int>, int)>& visit,
                       uint64_t limit = kDefaultEnumerationLimit);

std::vector<std::vector<int>> modular_points(const ModularInstance& inst, uint64_t limit = kDefaultEnumerationLimit);

/// pi_k = sum over solutions with k nonzero coordinates of prod_{x_j != 0} w_j, for k = 0..n.
template <class S>
std::vector<S> code_pi_table(const ModularInstance& inst, const std::vector<S>& w,
                             uint64_t limit = kDefaultEnumerationLimit);

Complex code_weight(const ModularInstance& inst, uint64_t limit = kDefaultEnumerationLimit);
GaussianRational code_weight_exact(const ModularInstance& inst, uint64_t limit = kDefaultEnumerationLimit);

/// Roots of the code polynomial sum_k pi_k z^k (computed exactly, then solved numerically).
std::vector<Complex> code_roots(const ModularInstance& inst, uint64_t limit = kDefaultEnumerationLimit);

/// p_k = number of solutions with exactly k nonzero coordinates, k = 0..n.
std::vector<mpz_class> enumerator_polynomial(const ModularInstance& inst, uint64_t limit = kDefaultEnumerationLimit);

bool is_prime(long p);

/// Rank over F_p; throws `Error(InvalidInput)` when p is not prime.
int rank_mod_prime(const SparseMatrix& a, int p);

/// Weight enumerator of the row space of `a` over F_p (the dual code).
std::vector<mpz_class> dual_enumerator_polynomial(const SparseMatrix& a, int p,
                                                  uint64_t limit = kDefaultEnumerationLimit);

/// Coefficients of p^{-dim} sum_k c_k (1 - z)^k (1 + (p - 1) z)^{n - k}: the transform of an enumerator.
std::vector<mpq_class> macwilliams_transform(const std::vector<mpz_class>& enumerator, int p, int n, int dim);

/// p_X(z) from the dual enumerator: p^{-dim C} (1 + (p-1) z)^n p_C((1 - z) / (1 + (p - 1) z)).
Complex macwilliams_forward(const std::vector<Complex>& dual_enumerator, int p, int n, int dim_c, Complex z);

/**
 * The value p_C(t) at t = (1 - z) / (1 + (p - 1) z) given p_X(z).
 * Throws `Error(DivisionByZero)` when 1 + (p - 1) z = 0.
 */
Complex macwilliams_dual_value(Complex px_at_z, int p, int n, int dim_c, Complex z);

/// Evaluate an integer-coefficient polynomial.
Complex evaluate(const std::vector<mpz_class>& coeffs, Complex z);

/// Vertex-by-edge incidence matrix over F_2 with uniform weight `w` per edge.
ModularInstance cut_code_matrix(const Graph& g, Complex w = 0.0);

}  // namespace wcount

#endif
