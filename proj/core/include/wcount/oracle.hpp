#ifndef WCOUNT_ORACLE_HPP
#define WCOUNT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wcount/instance.hpp"
#include "wcount/scalar.hpp"

// Exact evaluation by walking the box `0 <= x <= nu`.
//
// The walk assigns columns in index order. A branch is cut as soon as the
// degree cap is exceeded or some row can no longer reach zero given the
// coefficients and caps of its unassigned columns. Enumeration refuses to
// start when the number of candidate vectors exceeds the limit.

namespace wcount {

inline constexpr uint64_t kDefaultEnumerationLimit = uint64_t{1} << 24;

/// Number of box vectors (with degree at most `cap` when given), saturating at `limit + 1`.
uint64_t candidate_count(const std::vector<int>& nu, std::optional<long> cap, uint64_t limit);

/**
 * Call `visit(x, degree)` for every `x` with `Ax = 0`, `0 <= x <= nu` and,
 * when `cap` is set, `sum x <= cap`. Points arrive in lexicographic order.
 * Throws `Error(EnumerationLimitExceeded)` when the candidate count exceeds `limit`.
 */
void enumerate_points(const WeightedInstance& inst, std::optional<long> cap,
                      const std::function<void(std::span<const int>, long)>& visit,
                      uint64_t limit = kDefaultEnumerationLimit);

std::vector<std::vector<int>> collect_points(const WeightedInstance& inst, std::optional<long> cap,
                                             uint64_t limit = kDefaultEnumerationLimit);

/// pi_0..pi_s: sums of x-weights over solutions of each degree.
template <class S>
std::vector<S> pi_table(const WeightedInstance& inst, const std::vector<S>& w, int s,
                        uint64_t limit = kDefaultEnumerationLimit);

std::vector<Complex> pi_table(const WeightedInstance& inst, int s, uint64_t limit = kDefaultEnumerationLimit);
std::vector<GaussianRational> pi_table_exact(const WeightedInstance& inst, int s,
                                             uint64_t limit = kDefaultEnumerationLimit);

/// w(X) = sum over all solutions of prod w_j^{x_j}.
template <class S>
S exact_w(const WeightedInstance& inst, const std::vector<S>& w, uint64_t limit = kDefaultEnumerationLimit);

Complex exact_w(const WeightedInstance& inst, uint64_t limit = kDefaultEnumerationLimit);
GaussianRational exact_w_rational(const WeightedInstance& inst, uint64_t limit = kDefaultEnumerationLimit);

/// Full coefficient list of w(X; z), trailing zero coefficients removed. Computed exactly.
std::vector<GaussianRational> w_polynomial(const WeightedInstance& inst, uint64_t limit = kDefaultEnumerationLimit);

/// Roots of `c_0 + c_1 z + ...` with multiplicity; trailing exact zeros are trimmed first.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs);

/// Roots of w(X; z); empty when the polynomial is constant.
std::vector<Complex> roots_of_w(const WeightedInstance& inst, uint64_t limit = kDefaultEnumerationLimit);

/// sigma_k = sum_i z_i^{-k} for k = 1..k_max, index 0 unused.
std::vector<Complex> sigma_from_roots(const std::vector<Complex>& roots, int k_max);

}  // namespace wcount

#endif
