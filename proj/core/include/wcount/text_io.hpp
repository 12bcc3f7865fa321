#ifndef WCOUNT_TEXT_IO_HPP
#define WCOUNT_TEXT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "wcount/graph.hpp"
#include "wcount/reductions.hpp"
#include "wcount/scalar.hpp"

// Plain-text graph, hypergraph and matrix files. Vertices are 1-based,
// '#' starts a comment.
//
// Graph: optional `vertices <n>` line, then one `u v` per line (u == v is a loop).
//
// Hypergraph:
//
//     vertices 4
//     edges
//     1 2
//     3 4
//     2 3
//     matching
//     1 2
//     weights
//     1 0
//     1 0
//     0.01 0
//     end
//
// `matching` lists edge numbers (any line layout); `weights` holds one `<re> <im>`
// per edge or a single `uniform <re> <im>` line. Missing weights default to 1.
//
// Matrix: first line `<n>`, then n rows of n entries written `re` or `re,im`.

namespace wcount {

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& h);

std::vector<std::vector<Complex>> parse_matrix(std::string_view text);
std::string format_matrix(const std::vector<std::vector<Complex>>& m);

/// Parse `re` or `re,im`.
Complex parse_complex_token(std::string_view token);
/// Shortest representation that parses back to the same double.
std::string format_double(double x);

}  // namespace wcount

#endif
