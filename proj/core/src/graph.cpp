#include "wcount/graph.hpp"

#include <algorithm>
#include <string>

#include "wcount/error.hpp"

namespace wcount {

Graph::Graph(int n) {
    if (n < 0) {
        fail(ErrorKind::InvalidInput, "vertex count must be non-negative");
    }
    nbrs_.resize(n);
    loop_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        add_edge(u, v);
    }
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= size() || v >= size()) {
        fail(ErrorKind::InvalidInput, "edge {" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                                          "} uses a vertex outside 1.." + std::to_string(size()));
    }
    if (adjacent(u, v)) {
        fail(ErrorKind::InvalidInput,
             "repeated edge {" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + "}");
    }
    if (u > v) {
        std::swap(u, v);
    }
    edges_.push_back({u, v});
    if (u == v) {
        loop_[u] = 1;
        return;
    }
    nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
    nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) {
        return loop_[u] != 0;
    }
    return std::binary_search(nbrs_[u].begin(), nbrs_[u].end(), v);
}

bool Graph::has_loops() const { return std::any_of(loop_.begin(), loop_.end(), [](char c) { return c != 0; }); }

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < size(); ++v) {
        d = std::max(d, degree(v));
    }
    return d;
}

bool Graph::connected() const {
    if (size() == 0) {
        return true;
    }
    std::vector<char> seen(size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : nbrs_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == size();
}

std::optional<int> Graph::regular_degree() const {
    if (size() == 0) {
        return 0;
    }
    int d = degree(0);
    for (int v = 1; v < size(); ++v) {
        if (degree(v) != d) {
            return std::nullopt;
        }
    }
    return d;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) {
        g.add_edge(0, n - 1);
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace wcount
