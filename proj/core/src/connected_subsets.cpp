#include "wcount/connected_subsets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wcount {

namespace {

struct CallbackHooks {
    const std::function<void(std::span<const int>)>& visit;

    void enter(int) {}
    void leave(int) {}
    void emit(std::span<const int> set) { visit(set); }
};

}  // namespace

void for_each_connected_subset(const ColumnGraph& g, int k, int anchor,
                               const std::function<void(std::span<const int>)>& visit) {
    CallbackHooks hooks{visit};
    ConnectedSetWalker<CallbackHooks> walker(g, k, hooks);
    walker.run_anchor(anchor);
}

void for_each_connected_subset(const ColumnGraph& g, int k, const std::function<void(std::span<const int>)>& visit) {
    CallbackHooks hooks{visit};
    ConnectedSetWalker<CallbackHooks> walker(g, k, hooks);
    for (int v = 0; v < g.size(); ++v) {
        walker.run_anchor(v);
    }
}

std::vector<std::vector<int>> connected_subsets(const ColumnGraph& g, int k) {
    std::vector<std::vector<int>> out;
    for_each_connected_subset(g, k, [&](std::span<const int> set) {
        std::vector<int> s(set.begin(), set.end());
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> containing_counts(const ColumnGraph& g, int k) {
    std::vector<uint64_t> counts(g.size(), 0);
    for_each_connected_subset(g, k, [&](std::span<const int> set) {
        if (static_cast<int>(set.size()) == k) {
            for (int v : set) {
                ++counts[v];
            }
        }
    });
    return counts;
}

double connected_subset_bound(double d, int k) { return std::pow(std::numbers::e * d, k - 1) / 2.0; }

bool is_connected_subset(const ColumnGraph& g, std::span<const int> vertices) {
    if (vertices.empty()) {
        return false;
    }
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> seen(sorted.size(), 0);
    std::vector<size_t> queue{0};
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = sorted[queue[head]];
        for (int u : g.adj[v]) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), u);
            if (it != sorted.end() && *it == u) {
                size_t idx = static_cast<size_t>(it - sorted.begin());
                if (!seen[idx]) {
                    seen[idx] = 1;
                    queue.push_back(idx);
                }
            }
        }
    }
    return queue.size() == sorted.size();
}

}  // namespace wcount
