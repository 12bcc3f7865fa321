#ifndef WCOUNT_INSTANCE_HPP
#define WCOUNT_INSTANCE_HPP

#include <optional>
#include <vector>

#include "wcount/scalar.hpp"
#include "wcount/sparse_matrix.hpp"

// Weighted sparse systems `Ax = 0, 0 <= x <= nu` and their preprocessing.

namespace wcount {

/// Zero-freeness constant for weights.
inline constexpr double kAlpha = 0.46;
/// Working constant for the guaranteed region; alpha / beta > 1.
inline constexpr double kBeta = 0.45;

struct SparsityStats {
    int r = 0;   ///< max nonzeros in a row
    int c = 0;   ///< max nonzeros in a column
    long d = 0;  ///< r * c, the column-graph degree bound
};

/**
 * Homogeneous integer system with per-column weights and caps.
 *
 * `exact_w` optionally carries the weights as Gaussian rationals when they
 * were given as decimal or fractional literals; `exact_weights()` falls back
 * to the exact value of the stored doubles.
 */
struct WeightedInstance {
    SparseMatrix a;
    std::vector<Complex> w;
    std::vector<int> nu;
    std::optional<std::vector<GaussianRational>> exact_w;

    WeightedInstance() = default;
    WeightedInstance(SparseMatrix matrix, std::vector<Complex> weights, std::vector<int> caps,
                     std::optional<std::vector<GaussianRational>> exact = std::nullopt);

    int rows() const { return a.rows(); }
    int cols() const { return a.cols(); }
    /// Total degree bound N = sum of caps.
    long degree() const;
    std::vector<GaussianRational> exact_weights() const;
};

/**
 * System `Ax = 0 (mod kappa)` over `(Z/kappa Z)^n`; a point weighs the
 * product of `w_j` over its nonzero coordinates.
 */
struct ModularInstance {
    int kappa = 2;
    SparseMatrix a;  ///< entries in 1..kappa-1
    std::vector<Complex> w;
    std::optional<std::vector<GaussianRational>> exact_w;

    ModularInstance() = default;
    /// Reduces entries mod kappa and drops those that vanish.
    ModularInstance(int modulus, const SparseMatrix& matrix, std::vector<Complex> weights,
                    std::optional<std::vector<GaussianRational>> exact = std::nullopt);

    int rows() const { return a.rows(); }
    int cols() const { return a.cols(); }
    std::vector<GaussianRational> exact_weights() const;
};

/**
 * Columns taken out of a system, each contributing a univariate factor in zeta.
 *
 * For an integer column the factor is `1 + w z + ... + (w z)^nu`; for a
 * modular zero column it is `1 + (kappa - 1) w z`; a forced-zero column
 * contributes `1`.
 */
struct ZeroColumnFactor {
    struct Removed {
        int column;             ///< index in the original instance
        Complex w;
        std::vector<Complex> poly;  ///< coefficients in zeta, poly[0] == 1
    };
    std::vector<Removed> removed;

    Complex evaluate(Complex zeta) const;
    /// Product of all factors as a coefficient vector.
    std::vector<Complex> polynomial() const;
    long degree() const;
    bool empty() const { return removed.empty(); }
};

/// Result of a preprocessing step: the reduced system and the original index of each kept column.
template <class Instance>
struct Reduced {
    Instance instance;
    ZeroColumnFactor factor;
    std::vector<int> kept_columns;
};

/// Drop zero rows and move zero columns into the factor. Idempotent.
Reduced<WeightedInstance> normalize(const WeightedInstance& inst);
Reduced<ModularInstance> normalize(const ModularInstance& inst);

/**
 * Normalize, then repeatedly remove columns forced to zero by rows with a
 * single nonzero entry until stable. In modular mode a single entry forces
 * zero only when it is a unit mod kappa.
 */
Reduced<WeightedInstance> prepare(const WeightedInstance& inst);
Reduced<ModularInstance> prepare(const ModularInstance& inst);

SparsityStats sparsity(const SparseMatrix& a);

struct WeightBoundReport {
    double threshold = 0.0;
    std::vector<double> magnitudes;
    double max_magnitude = 0.0;
    double margin = 0.0;  ///< threshold - max magnitude
    bool pass = true;
};

/// Compare |w_j| against constant / (r sqrt(c)), using r >= 2.
WeightBoundReport weight_bound_check(const WeightedInstance& inst, double constant);
/// Same with the extra 1 / (kappa - 1) factor.
WeightBoundReport weight_bound_check(const ModularInstance& inst, double constant);

/// Undirected graph on columns; `adj[j]` is sorted ascending.
struct ColumnGraph {
    std::vector<std::vector<int>> adj;

    int size() const { return static_cast<int>(adj.size()); }
    size_t max_degree() const;
    size_t edge_count() const;
};

ColumnGraph column_graph(const SparseMatrix& a);

}  // namespace wcount

#endif
