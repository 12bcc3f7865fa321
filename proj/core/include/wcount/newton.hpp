#ifndef WCOUNT_NEWTON_HPP
#define WCOUNT_NEWTON_HPP

#include <vector>

#include "wcount/error.hpp"
#include "wcount/scalar.hpp"

// Conversions between polynomial coefficients and power sums of inverse roots.
//
// For `p(z) = pi_0 + pi_1 z + ... ` with `pi_0 = 1` and roots `z_i`, the
// power sums `sigma_k = sum_i z_i^{-k}` satisfy
// `k pi_k = -(pi_{k-1} sigma_1 + pi_{k-2} sigma_2 + ... + pi_0 sigma_k)`.
//
// Both tables are stored with index 0 in use: `pi[0] = 1`, `sigma[0] = 0`.

namespace wcount {

namespace debug {

/// Test hook: when set, the power-sum recursion uses the wrong sign on its convolution term.
void set_newton_fault(bool on);
bool newton_fault();

}  // namespace debug

/// sigma_1..sigma_{k_max} from pi_0..pi_{k_max}; requires pi[0] == 1.
template <class S>
std::vector<S> sigma_from_pi(const std::vector<S>& pi, int k_max) {
    if (k_max < 0 || static_cast<size_t>(k_max) >= pi.size()) {
        fail(ErrorKind::InvalidInput, "power-sum order exceeds the coefficient table");
    }
    if (!(pi[0] == S(1))) {
        fail(ErrorKind::InvalidInput, "coefficient table must start with 1");
    }
    const bool fault = debug::newton_fault();
    std::vector<S> sigma(static_cast<size_t>(k_max) + 1, S(0));
    for (int k = 1; k <= k_max; ++k) {
        S acc = S(0);
        for (int i = 1; i < k; ++i) {
            acc += pi[k - i] * sigma[i];
        }
        S value = S(-static_cast<long>(k)) * pi[k];
        if (fault) {
            value += acc;
        } else {
            value -= acc;
        }
        sigma[k] = value;
    }
    return sigma;
}

/// pi_0..pi_k from sigma_1..sigma_k (sigma[0] ignored).
template <class S>
std::vector<S> pi_from_sigma(const std::vector<S>& sigma) {
    const int k_max = sigma.empty() ? 0 : static_cast<int>(sigma.size()) - 1;
    std::vector<S> pi(static_cast<size_t>(k_max) + 1, S(0));
    pi[0] = S(1);
    for (int k = 1; k <= k_max; ++k) {
        S acc = S(0);
        for (int i = 1; i <= k; ++i) {
            acc += pi[k - i] * sigma[i];
        }
        pi[k] = -acc / S(static_cast<long>(k));
    }
    return pi;
}

/**
 * Extend power sums of a polynomial of degree at most `degree` beyond the
 * computed range: coefficients above `degree` are zero, so the recursion
 * continues exactly.
 */
template <class S>
std::vector<S> extend_sigma(const std::vector<S>& sigma, long degree, int k_max) {
    const int known = sigma.empty() ? 0 : static_cast<int>(sigma.size()) - 1;
    if (k_max <= known) {
        return std::vector<S>(sigma.begin(), sigma.begin() + k_max + 1);
    }
    if (known < degree) {
        fail(ErrorKind::InvalidInput, "power sums must be known up to the degree bound before extension");
    }
    std::vector<S> pi = pi_from_sigma(sigma);
    pi.resize(static_cast<size_t>(k_max) + 1, S(0));
    return sigma_from_pi(pi, k_max);
}

}  // namespace wcount

#endif
