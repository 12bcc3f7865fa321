#ifndef WCOUNT_TESTS_COMMON_HPP
#define WCOUNT_TESTS_COMMON_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "wcount/error.hpp"
#include "wcount/instance.hpp"
#include "wcount/wcount_format.hpp"

namespace wcount::testing {

/// WCOUNT text for a 1-based entry list with uniform weight.
inline std::string instance_text(int m, int n, const std::vector<Triplet>& entries, const std::vector<int>& nu,
                                 const std::string& weight, const std::string& mode = "integer") {
    std::string s = "WCOUNT v1\nmode " + mode + "\ndims " + std::to_string(m) + " " + std::to_string(n) + "\n";
    if (mode == "integer") {
        s += "nu";
        for (int v : nu) {
            s += " " + std::to_string(v);
        }
        s += "\n";
    }
    s += "weights uniform " + weight + " 0\nentries\n";
    for (const auto& t : entries) {
        s += std::to_string(t.row) + " " + std::to_string(t.col) + " " + std::to_string(t.value) + "\n";
    }
    return s + "end\n";
}

/// A = [1, -1], caps 1.
inline WeightedInstance i1(const std::string& weight = "0.1") {
    return parse_weighted_instance(instance_text(1, 2, {{1, 1, 1}, {1, 2, -1}}, {1, 1}, weight));
}

/// A = [[1, -1, 0], [0, 1, -1]], caps 1.
inline WeightedInstance i3(const std::string& weight = "0.1") {
    return parse_weighted_instance(
        instance_text(2, 3, {{1, 1, 1}, {1, 2, -1}, {2, 2, 1}, {2, 3, -1}}, {1, 1, 1}, weight));
}

/// I1 (+) I1.
inline WeightedInstance i1_twice(const std::string& weight = "0.1") {
    return parse_weighted_instance(
        instance_text(2, 4, {{1, 1, 1}, {1, 2, -1}, {2, 3, 1}, {2, 4, -1}}, {1, 1, 1, 1}, weight));
}

inline ModularInstance code(int kappa, int m, int n, const std::vector<Triplet>& entries, const std::string& weight) {
    return parse_modular_instance(instance_text(m, n, entries, {}, weight, "modular " + std::to_string(kappa)));
}

/// The kind of the `Error` thrown by f, if any.
template <class F>
std::optional<ErrorKind> error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline double scaled_gap(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline double log_gap(Complex approx, Complex exact) { return std::abs(std::log(approx / exact)); }

}  // namespace wcount::testing

#define EXPECT_CNEAR(a, b, tol) EXPECT_LE(std::abs(::wcount::Complex(a) - ::wcount::Complex(b)), tol)

#endif
