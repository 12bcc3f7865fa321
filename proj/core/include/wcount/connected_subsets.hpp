#ifndef WCOUNT_CONNECTED_SUBSETS_HPP
#define WCOUNT_CONNECTED_SUBSETS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wcount/instance.hpp"

// Enumeration of vertex sets inducing connected subgraphs.
//
// Sets are grown from an anchor, which is always the smallest vertex of the
// set. A vertex enters the extension list only through the first set member
// it is adjacent to (its exclusive neighborhood), so each connected set is
// produced exactly once.

namespace wcount {

/**
 * Anchored connected-set walker with push/pop hooks.
 *
 * `Hooks` provides `enter(int v)`, `leave(int v)` and
 * `emit(std::span<const int> set)`; the set is given in insertion order with
 * the anchor first. Hooks see every push and pop, which lets callers keep
 * incremental per-set state.
 */
template <class Hooks>
class ConnectedSetWalker {
public:
    ConnectedSetWalker(const ColumnGraph& g, int max_size, Hooks& hooks)
        : g_(g), max_size_(max_size), hooks_(hooks), closed_(g.size(), 0) {}

    void run_anchor(int anchor) {
        if (max_size_ < 1) {
            return;
        }
        anchor_ = anchor;
        ext_.clear();
        for (int u : g_.adj[anchor]) {
            if (u > anchor) {
                ext_.push_back(u);
            }
        }
        push(anchor);
        extend(0, ext_.size());
        pop(anchor);
    }

private:
    void push(int v) {
        set_.push_back(v);
        ++closed_[v];
        for (int u : g_.adj[v]) {
            ++closed_[u];
        }
        hooks_.enter(v);
    }

    void pop(int v) {
        hooks_.leave(v);
        for (int u : g_.adj[v]) {
            --closed_[u];
        }
        --closed_[v];
        set_.pop_back();
    }

    // The extension list of this level is ext_[begin, end).
    void extend(size_t begin, size_t end) {
        hooks_.emit(std::span<const int>(set_));
        if (static_cast<int>(set_.size()) == max_size_) {
            return;
        }
        while (end > begin) {
            int w = ext_[--end];
            size_t child = ext_.size();
            for (size_t p = begin; p < end; ++p) {
                ext_.push_back(ext_[p]);
            }
            for (int u : g_.adj[w]) {
                if (u > anchor_ && closed_[u] == 0) {
                    ext_.push_back(u);
                }
            }
            push(w);
            extend(child, ext_.size());
            pop(w);
            ext_.resize(child);
        }
    }

    const ColumnGraph& g_;
    int max_size_;
    Hooks& hooks_;
    int anchor_ = 0;
    std::vector<int> set_;
    std::vector<int> ext_;
    std::vector<int> closed_;
};

/// Visit every connected set of size 1..k whose smallest vertex is `anchor`.
void for_each_connected_subset(const ColumnGraph& g, int k, int anchor,
                               const std::function<void(std::span<const int>)>& visit);

/// Visit every connected set of size 1..k, anchors in ascending order.
void for_each_connected_subset(const ColumnGraph& g, int k, const std::function<void(std::span<const int>)>& visit);

/// All connected sets of size 1..k, each sorted ascending, in lexicographic order.
std::vector<std::vector<int>> connected_subsets(const ColumnGraph& g, int k);

/// For each vertex, the number of connected sets of size exactly k that contain it.
std::vector<uint64_t> containing_counts(const ColumnGraph& g, int k);

/// The bound (e d)^{k-1} / 2 on connected k-sets through a vertex, for k >= 2.
double connected_subset_bound(double d, int k);

/// Connectivity of a vertex subset in the induced subgraph (breadth-first search).
bool is_connected_subset(const ColumnGraph& g, std::span<const int> vertices);

}  // namespace wcount

#endif
