#ifndef WCOUNT_POWERSUM_HPP
#define WCOUNT_POWERSUM_HPP

#include <cstdint>
#include <vector>

#include "wcount/instance.hpp"
#include "wcount/scalar.hpp"

// Power sums of inverse roots of w(X; z) from local data on connected column sets.
//
// For a column set C let lambda_k(C) be the weighted count of solutions with
// support exactly C and degree k. The quantities
//
//     mu_k(C) = -k lambda_k(C) - sum_{i=1}^{k-1} sum_{C1 u C2 = C} lambda_{k-i}(C1) mu_i(C2)
//
// vanish unless C induces a connected subgraph of the column graph and
// |C| <= k, and sigma_k is the sum of mu_k(C) over connected C. Submatrices
// are identified with their column sets: the rows are always all rows of the
// parent that are nonzero on those columns.
//
// Work is split by anchor (smallest column of a set). Each worker keeps its
// own memo of lambda and mu values; per-anchor partial sums are reduced in
// anchor order, so results do not depend on the thread count.

namespace wcount {

struct FastOptions {
    int threads = 1;
    /// Skip sets containing a column that no solution inside the set can use.
    bool prune = true;
    /// Debug: also evaluate mu on disconnected sets (all subsets of size <= k). Disables pruning.
    bool include_disconnected = false;
    /// Debug: rebuild every contributing (B1, B2) pair and check compatibility and B1 # B2 == B.
    bool verify_pairs = false;
    /// Keep every evaluated set with its lambda and mu values.
    bool collect_table = false;
};

template <class S>
struct MuEntry {
    std::vector<int> cols;  ///< ascending parent column ids
    bool connected = true;
    std::vector<S> lambda;  ///< lambda_0..lambda_k
    std::vector<S> mu;      ///< mu_0..mu_k
};

template <class S>
struct FastResult {
    std::vector<S> sigma;                   ///< sigma_0..sigma_k, sigma_0 = 0
    uint64_t subsets_enumerated = 0;        ///< top-level sets produced by the enumerator
    std::vector<uint64_t> subsets_by_size;  ///< index = set size
    uint64_t sets_evaluated = 0;            ///< sets whose mu values were computed
    uint64_t pairs_verified = 0;
    double max_disconnected_mu = 0.0;  ///< largest |mu_k| over disconnected sets (debug mode)
    std::vector<MuEntry<S>> table;     ///< when `collect_table`, sorted by column set
};

/// sigma_1..sigma_k of an integer system with weights `w`.
template <class S>
FastResult<S> sigma_fast(const WeightedInstance& inst, const std::vector<S>& w, int k_max,
                         const FastOptions& options = {});

FastResult<Complex> sigma_fast(const WeightedInstance& inst, int k_max, const FastOptions& options = {});

/**
 * sigma_1..sigma_k for a modular system, where the degree of a point is its
 * number of nonzero coordinates and lambda_k(C) = [k = |C|] prod_{j in C} w_j
 * times the number of solutions with support exactly C.
 */
template <class S>
FastResult<S> code_sigma_fast(const ModularInstance& inst, const std::vector<S>& w, int k_max,
                              const FastOptions& options = {});

FastResult<Complex> code_sigma_fast(const ModularInstance& inst, int k_max, const FastOptions& options = {});

/// lambda and mu values on every connected set with at most k columns (and disconnected ones when asked).
template <class S>
std::vector<MuEntry<S>> mu_table(const WeightedInstance& inst, const std::vector<S>& w, int k,
                                 bool include_disconnected = false);

/// Thread count from `WCOUNT_THREADS`, else 1.
int default_thread_count();

}  // namespace wcount

#endif
