#include "wcount/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "text_util.hpp"
#include "wcount/error.hpp"

namespace wcount {

using detail::bad;
using detail::Line;
using detail::to_double;
using detail::to_int;
using detail::tokenize;

namespace {

int vertex(const Line& line, const std::string& tok, int n) {
    int v = to_int(line, tok);
    if (v < 1 || (n >= 0 && v > n)) {
        bad(line, "vertex " + tok + " is out of range");
    }
    return v - 1;
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) {
        return format_double(z.real());
    }
    return format_double(z.real()) + "," + format_double(z.imag());
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

Complex parse_complex_token(std::string_view token) {
    Line line{0, {}};
    auto comma = token.find(',');
    if (comma == std::string_view::npos) {
        return {to_double(line, std::string(token)), 0.0};
    }
    return {to_double(line, std::string(token.substr(0, comma))),
            to_double(line, std::string(token.substr(comma + 1)))};
}

Graph parse_graph(std::string_view text) {
    auto lines = tokenize(text);
    int n = -1;
    size_t first = 0;
    if (!lines.empty() && lines[0].tokens[0] == "vertices") {
        if (lines[0].tokens.size() != 2) {
            bad(lines[0], "expected 'vertices <n>'");
        }
        n = to_int(lines[0], lines[0].tokens[1]);
        if (n < 0) {
            bad(lines[0], "vertex count must be non-negative");
        }
        first = 1;
    }
    std::vector<std::pair<int, int>> edges;
    int top = 0;
    for (size_t t = first; t < lines.size(); ++t) {
        const auto& line = lines[t];
        if (line.tokens.size() != 2) {
            bad(line, "expected an edge 'u v'");
        }
        int u = vertex(line, line.tokens[0], n);
        int v = vertex(line, line.tokens[1], n);
        top = std::max({top, u + 1, v + 1});
        edges.push_back({u, v});
    }
    Graph g(n >= 0 ? n : top);
    for (size_t e = 0; e < edges.size(); ++e) {
        try {
            g.add_edge(edges[e].first, edges[e].second);
        } catch (const Error& err) {
            bad(lines[first + e], err.what());
        }
    }
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices " << g.size() << "\n";
    for (auto [u, v] : g.edges()) {
        out << u + 1 << " " << v + 1 << "\n";
    }
    return out.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
    auto lines = tokenize(text);
    int n = -1;
    std::vector<std::vector<int>> edges;
    std::vector<int> matching;
    std::vector<Complex> weights;
    std::optional<Complex> uniform;
    enum class Section { None, Edges, Matching, Weights, Done } section = Section::None;
    for (const auto& line : lines) {
        const auto& head = line.tokens[0];
        if (section == Section::Done) {
            bad(line, "content after 'end'");
        }
        if (head == "vertices") {
            if (line.tokens.size() != 2 || section != Section::None) {
                bad(line, "'vertices <n>' must come first");
            }
            n = to_int(line, line.tokens[1]);
            if (n < 0) {
                bad(line, "vertex count must be non-negative");
            }
            continue;
        }
        if (head == "edges" || head == "matching" || head == "weights" || head == "end") {
            if (line.tokens.size() != 1) {
                bad(line, "section header '" + head + "' takes no arguments");
            }
            section = head == "edges"      ? Section::Edges
                      : head == "matching" ? Section::Matching
                      : head == "weights"  ? Section::Weights
                                           : Section::Done;
            continue;
        }
        switch (section) {
            case Section::Edges: {
                std::vector<int> edge;
                for (const auto& tok : line.tokens) {
                    edge.push_back(vertex(line, tok, n));
                }
                edges.push_back(std::move(edge));
                break;
            }
            case Section::Matching:
                for (const auto& tok : line.tokens) {
                    int e = to_int(line, tok);
                    if (e < 1) {
                        bad(line, "edge numbers start at 1");
                    }
                    matching.push_back(e - 1);
                }
                break;
            case Section::Weights:
                if (head == "uniform") {
                    if (line.tokens.size() != 3) {
                        bad(line, "expected 'uniform <re> <im>'");
                    }
                    uniform = Complex(to_double(line, line.tokens[1]), to_double(line, line.tokens[2]));
                } else {
                    if (line.tokens.size() != 2) {
                        bad(line, "expected '<re> <im>'");
                    }
                    weights.push_back({to_double(line, line.tokens[0]), to_double(line, line.tokens[1])});
                }
                break;
            default:
                bad(line, "expected a section header (edges, matching, weights, end)");
        }
    }
    if (uniform) {
        if (!weights.empty()) {
            fail(ErrorKind::InvalidInput, "weights section mixes 'uniform' with a list");
        }
        weights.assign(edges.size(), *uniform);
    } else if (weights.empty()) {
        weights.assign(edges.size(), 1.0);
    } else if (weights.size() != edges.size()) {
        fail(ErrorKind::InvalidInput, "expected " + std::to_string(edges.size()) + " weights, got " +
                                          std::to_string(weights.size()));
    }
    if (n < 0) {
        n = 0;
        for (const auto& e : edges) {
            n = std::max(n, *std::max_element(e.begin(), e.end()) + 1);
        }
    }
    return Hypergraph(n, std::move(edges), std::move(weights), std::move(matching));
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "vertices " << h.n << "\nedges\n";
    for (const auto& e : h.edges) {
        for (size_t t = 0; t < e.size(); ++t) {
            out << (t ? " " : "") << e[t] + 1;
        }
        out << "\n";
    }
    if (!h.matching.empty()) {
        out << "matching\n";
        for (size_t t = 0; t < h.matching.size(); ++t) {
            out << (t ? " " : "") << h.matching[t] + 1;
        }
        out << "\n";
    }
    out << "weights\n";
    for (const auto& a : h.a) {
        out << format_double(a.real()) << " " << format_double(a.imag()) << "\n";
    }
    out << "end\n";
    return out.str();
}

std::vector<std::vector<Complex>> parse_matrix(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens.size() != 1) {
        fail(ErrorKind::InvalidInput, "matrix file must start with its size");
    }
    int n = to_int(lines[0], lines[0].tokens[0]);
    if (n < 0 || static_cast<int>(lines.size()) != n + 1) {
        fail(ErrorKind::InvalidInput, "expected " + std::to_string(std::max(n, 0)) + " matrix rows");
    }
    std::vector<std::vector<Complex>> m(n);
    for (int i = 0; i < n; ++i) {
        const auto& line = lines[i + 1];
        if (static_cast<int>(line.tokens.size()) != n) {
            bad(line, "expected " + std::to_string(n) + " entries");
        }
        for (const auto& tok : line.tokens) {
            try {
                m[i].push_back(parse_complex_token(tok));
            } catch (const Error&) {
                bad(line, "malformed entry '" + tok + "'");
            }
        }
    }
    return m;
}

std::string format_matrix(const std::vector<std::vector<Complex>>& m) {
    std::ostringstream out;
    out << m.size() << "\n";
    for (const auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) {
            out << (j ? " " : "") << format_complex(row[j]);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace wcount
