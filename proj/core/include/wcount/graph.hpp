#ifndef WCOUNT_GRAPH_HPP
#define WCOUNT_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace wcount {

/// Undirected graph on vertices 0..n-1 without multiple edges; loops are allowed.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws `Error(InvalidInput)` on out-of-range vertices or repeated edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(nbrs_.size()); }
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const;
    bool has_loop(int v) const { return loop_[v] != 0; }
    bool has_loops() const;
    /// Neighbors other than v itself, ascending.
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
    /// Edges as (u, v) with u <= v, in insertion order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    /// Incident edges, a loop counting once.
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()) + loop_[v]; }
    int max_degree() const;
    bool connected() const;
    /// The common degree when every vertex has the same degree.
    std::optional<int> regular_degree() const;

private:
    std::vector<std::vector<int>> nbrs_;
    std::vector<char> loop_;
    std::vector<std::pair<int, int>> edges_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace wcount

#endif
