#ifndef WCOUNT_INTERPOLATION_HPP
#define WCOUNT_INTERPOLATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "wcount/instance.hpp"
#include "wcount/scalar.hpp"

// Truncated Taylor approximation of ln w(X; z) at z = 1.
//
// With f(z) = ln w(X; z), f(0) = 0 and f^{(k)}(0) / k! = -sigma_k / k.
// If w(X; z) has no zeros in |z| <= gamma with gamma > 1 and degree at most
// N, the degree-s Taylor polynomial T_s satisfies
// |f(1) - T_s(1)| <= N / ((s + 1) gamma^s (gamma - 1)).

namespace wcount {

/// gamma = alpha / (r sqrt(c) max|w_j|) with r >= 2. Throws `Error(AllWeightsZero)`.
double effective_gamma(const WeightedInstance& inst, double alpha = kAlpha);
/// gamma = alpha / ((kappa - 1) r sqrt(c) max|w_j|).
double effective_gamma(const ModularInstance& inst, double alpha = kAlpha);

double truncation_bound(long n, double gamma, int s);

/// Smallest s with truncation_bound(n, gamma, s) <= epsilon.
int choose_s(long n, double gamma, double epsilon);

/// Taylor coefficients of ln w(X; z): index 0 is 0, index k is -sigma_k / k.
std::vector<Complex> taylor_from_sigma(const std::vector<Complex>& sigma, int s);

struct ApproxOptions {
    double epsilon = 1e-3;
    std::optional<int> s_override;
    bool force = false;
    double alpha = kAlpha;
    int threads = 1;
    /// A known bound on the degree of w(X; z), used when smaller than the sum of caps.
    std::optional<long> degree_bound;
};

struct ApproxReport {
    Complex value;      ///< approximation of w(X)
    Complex log_value;  ///< T_s(1)
    Complex factor = 1.0;  ///< contribution of removed columns at z = 1
    int s = 0;
    std::optional<double> gamma;  ///< absent when every weight is zero
    std::optional<double> bound;  ///< absent when gamma <= 1
    bool certified = true;
    long degree_bound = 0;
    int k_computed = 0;  ///< power sums computed by the connected-set algorithm
    SparsityStats stats;
    double max_weight = 0.0;
    int columns = 0;  ///< columns left after preprocessing
    uint64_t subsets_enumerated = 0;
    std::vector<Complex> sigma;         ///< sigma_0..sigma_s
    std::vector<Complex> coefficients;  ///< Taylor coefficients 0..s
    std::vector<std::string> warnings;
};

ApproxReport approx_w(const WeightedInstance& inst, const ApproxOptions& options = {});
ApproxReport approx_code_weight(const ModularInstance& inst, const ApproxOptions& options = {});

}  // namespace wcount

#endif
