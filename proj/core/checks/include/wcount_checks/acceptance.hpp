#ifndef WCOUNT_CHECKS_ACCEPTANCE_HPP
#define WCOUNT_CHECKS_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wcount/generators.hpp"
#include "wcount/instance.hpp"

// Release-gate suites. Each runner draws its own seeded instances, compares
// against exact or exhaustive ground truth and reports one verdict.

namespace wcount::acceptance {

struct Config {
    uint64_t seed = 20240531;
    /// Smaller instance counts, for quick runs.
    bool reduced = false;
    int threads = 1;
};

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 9;

/// Random instance of the shared family: n <= 14, m <= 10, r <= 4, c <= 3, caps <= 2,
/// |w_j| uniform below beta / (r sqrt(c)).
WeightedInstance family_instance(uint64_t seed, int index);

Result oracle_equivalence(const Config& config);    // 1
Result end_to_end_accuracy(const Config& config);   // 2
Result zero_freeness(const Config& config);         // 3
Result additivity(const Config& config);            // 4
Result disconnected_vanishing(const Config& config); // 5
Result subset_enumeration(const Config& config);    // 6
Result macwilliams_round_trip(const Config& config); // 7
Result applications(const Config& config);          // 8
Result scaling(const Config& config);               // 9

/// Run the listed criteria (all when empty), in order; `progress` sees each result as it finishes.
std::vector<Result> run(const Config& config, const std::vector<int>& ids = {},
                        const std::function<void(const Result&)>& progress = {});

/// "PASS  3  zero-freeness  ...  (1.23 s)"
std::string format(const Result& r);

}  // namespace wcount::acceptance

#endif
