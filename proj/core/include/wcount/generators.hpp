#ifndef WCOUNT_GENERATORS_HPP
#define WCOUNT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "wcount/graph.hpp"
#include "wcount/instance.hpp"
#include "wcount/reductions.hpp"
#include "wcount/scalar.hpp"

// Seeded random instances. Draws go through mt19937_64 with explicit
// rejection sampling, so a seed gives the same instance with any standard library.

namespace wcount {

class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }
    /// Uniform in [0, bound).
    uint64_t below(uint64_t bound);
    /// Uniform in [lo, hi].
    int between(int lo, int hi);
    /// Uniform in [0, 1).
    double unit();
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    bool coin() { return (next() >> 63) != 0; }
    /// exp(i theta) with theta uniform.
    Complex phase();

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Seed for stream `index` of a run seeded with `seed`.
uint64_t derive_seed(uint64_t seed, uint64_t index);

/**
 * Rows get between 2 and r entries, columns at most c; every row has both
 * signs, magnitudes in 1..coeff_max. Zero columns are dropped afterwards.
 * Weights have modulus `scale * beta / (max(r, 2) sqrt(c))` with the realized
 * r and c: exactly when `exact_magnitude`, otherwise uniform below it.
 */
struct InstanceParams {
    int n = 10;
    int m = 6;
    int r = 4;
    int c = 3;
    int nu_max = 2;
    int coeff_max = 2;
    double scale = 1.0;
    bool exact_magnitude = false;
    bool complex_weights = true;
};

WeightedInstance random_instance(Rng& rng, const InstanceParams& params);

WeightedInstance direct_sum(const WeightedInstance& x, const WeightedInstance& y);

/**
 * n columns, n rows, three entries of mixed sign in every row and column, caps 1.
 * Rows are drawn inside blocks of six columns; a fraction `rewire` of rows
 * then trades one entry with a random row, which links the blocks.
 */
WeightedInstance scaling_instance(Rng& rng, int n, double weight_scale = 0.5, double rewire = 0.1);

/// As `random_instance` over Z/kappa with entries in 1..kappa-1 and the (kappa - 1) weight factor.
struct CodeParams {
    int kappa = 2;
    int n = 10;
    int m = 5;
    int r = 4;
    int c = 3;
    double scale = 1.0;
    bool exact_magnitude = false;
    bool complex_weights = true;
};

ModularInstance random_code(Rng& rng, const CodeParams& params);

/// Random spanning tree plus each further pair with probability p; loops with probability loop_p.
Graph random_connected_graph(Rng& rng, int n, double p, double loop_p = 0.0);

/// Connected simple d-regular graph by the configuration model with restarts; n d must be even.
Graph random_regular_graph(Rng& rng, int n, int d);

/**
 * k-uniform hypergraph on k * parts vertices: a perfect matching plus `extra`
 * further distinct edges. Matching weights have modulus in [0.5, 2] with random
 * phase; other weights have modulus at most `off_scale`.
 */
Hypergraph random_hypergraph(Rng& rng, int k, int parts, int extra, double off_scale);

/// I + E where E has at most one entry per row and column, each of modulus at most e_max.
std::vector<std::vector<Complex>> random_permanent_matrix(Rng& rng, int n, double e_max);

}  // namespace wcount

#endif
