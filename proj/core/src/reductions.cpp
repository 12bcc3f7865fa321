#include "wcount/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "wcount/error.hpp"

namespace wcount {

AffineSystem::AffineSystem(SparseMatrix matrix, std::vector<long> rhs, std::vector<int> witness)
    : a(std::move(matrix)), b(std::move(rhs)), y(std::move(witness)) {
    if (static_cast<int>(b.size()) != a.rows() || static_cast<int>(y.size()) != a.cols()) {
        fail(ErrorKind::InvalidInput, "right-hand side or witness has the wrong length");
    }
    for (int v : y) {
        if (v != 0 && v != 1) {
            fail(ErrorKind::InfeasibleWitness, "witness is not a 0-1 vector");
        }
    }
    for (int i = 0; i < a.rows(); ++i) {
        long s = 0;
        for (const auto& e : a.row(i)) {
            s += e.value * y[e.index];
        }
        if (s != b[i]) {
            fail(ErrorKind::InfeasibleWitness, "witness violates equation " + std::to_string(i + 1) + ": got " +
                                                   std::to_string(s) + ", expected " + std::to_string(b[i]));
        }
    }
}

WeightedInstance affine_shift(const AffineSystem& sys, std::vector<Complex> w,
                              std::optional<std::vector<GaussianRational>> exact) {
    std::vector<Triplet> entries;
    entries.reserve(sys.a.triplets().size());
    for (const auto& t : sys.a.triplets()) {
        entries.push_back({t.row, t.col, sys.y[t.col] ? -t.value : t.value});
    }
    SparseMatrix flipped(sys.a.rows(), sys.a.cols(), std::move(entries));
    return WeightedInstance(std::move(flipped), std::move(w), std::vector<int>(sys.a.cols(), 1), std::move(exact));
}

ApproxReport hamming_sum(const AffineSystem& sys, Complex omega, const ApproxOptions& options) {
    auto inst = affine_shift(sys, std::vector<Complex>(sys.a.cols(), omega));
    return approx_w(inst, options);
}

Hypergraph::Hypergraph(int vertices, std::vector<std::vector<int>> edge_list, std::vector<Complex> weights,
                       std::vector<int> perfect_matching)
    : n(vertices), edges(std::move(edge_list)), a(std::move(weights)), matching(std::move(perfect_matching)) {
    if (n < 0) {
        fail(ErrorKind::InvalidInput, "vertex count must be non-negative");
    }
    if (a.size() != edges.size()) {
        fail(ErrorKind::InvalidInput, "expected one weight per edge");
    }
    for (size_t e = 0; e < edges.size(); ++e) {
        auto& edge = edges[e];
        if (edge.empty()) {
            fail(ErrorKind::InvalidInput, "edge " + std::to_string(e + 1) + " is empty");
        }
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
            fail(ErrorKind::InvalidInput, "edge " + std::to_string(e + 1) + " repeats a vertex");
        }
        if (edge.front() < 0 || edge.back() >= n) {
            fail(ErrorKind::InvalidInput, "edge " + std::to_string(e + 1) + " uses a vertex outside 1.." +
                                              std::to_string(n));
        }
    }
    auto sorted = matching;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        fail(ErrorKind::InvalidInput, "matching lists an edge twice");
    }
    for (int e : matching) {
        if (e < 0 || e >= edge_count()) {
            fail(ErrorKind::InvalidInput, "matching refers to edge " + std::to_string(e + 1) + " which does not exist");
        }
    }
}

std::optional<int> Hypergraph::uniformity() const {
    if (edges.empty()) {
        return std::nullopt;
    }
    const size_t k = edges.front().size();
    for (const auto& e : edges) {
        if (e.size() != k) {
            return std::nullopt;
        }
    }
    return static_cast<int>(k);
}

int Hypergraph::max_degree() const {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges) {
        for (int v : e) {
            ++deg[v];
        }
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int Hypergraph::rank() const {
    size_t k = 0;
    for (const auto& e : edges) {
        k = std::max(k, e.size());
    }
    return static_cast<int>(k);
}

AffineSystem matching_system(const Hypergraph& h) {
    std::vector<int> cover(h.n, 0);
    for (int e : h.matching) {
        for (int v : h.edges[e]) {
            ++cover[v];
        }
    }
    for (int v = 0; v < h.n; ++v) {
        if (cover[v] != 1) {
            fail(ErrorKind::InfeasibleWitness, "the matching covers vertex " + std::to_string(v + 1) + " " +
                                                   std::to_string(cover[v]) + " times");
        }
    }
    std::vector<Triplet> entries;
    for (int e = 0; e < h.edge_count(); ++e) {
        for (int v : h.edges[e]) {
            entries.push_back({v, e, 1});
        }
    }
    std::vector<int> y(h.edge_count(), 0);
    for (int e : h.matching) {
        y[e] = 1;
    }
    return AffineSystem(SparseMatrix(h.n, h.edge_count(), std::move(entries)), std::vector<long>(h.n, 1),
                        std::move(y));
}

RescaledHypergraph rescale_edge_weights(const Hypergraph& h) {
    auto k = h.uniformity();
    if (!k) {
        fail(ErrorKind::InvalidInput, "rescaling needs a uniform hypergraph");
    }
    std::vector<Complex> alpha(h.n, 1.0);
    std::vector<char> in_matching(h.edge_count(), 0);
    Complex factor = 1.0;
    for (int e : h.matching) {
        in_matching[e] = 1;
        if (is_zero(h.a[e])) {
            fail(ErrorKind::ZeroWeightOnMatching, "matching edge " + std::to_string(e + 1) + " has weight 0");
        }
        Complex root = std::polar(std::pow(std::abs(h.a[e]), 1.0 / *k), std::arg(h.a[e]) / *k);
        for (int v : h.edges[e]) {
            alpha[v] = root;
            factor *= root;
        }
    }
    RescaledHypergraph out{h, factor};
    for (int e = 0; e < h.edge_count(); ++e) {
        if (in_matching[e]) {
            out.h.a[e] = 1.0;
            continue;
        }
        Complex scale = 1.0;
        for (int v : h.edges[e]) {
            scale *= alpha[v];
        }
        out.h.a[e] = h.a[e] / scale;
    }
    return out;
}

double default_matching_omega(const Hypergraph& h) {
    auto k = h.uniformity();
    if (!k) {
        fail(ErrorKind::InvalidInput, "matching weights need a uniform hypergraph");
    }
    return kBeta / (std::max(h.max_degree(), 2) * std::sqrt(static_cast<double>(*k)));
}

ApproxReport matching_weight(const Hypergraph& h, const MatchingOptions& options) {
    auto scaled = rescale_edge_weights(h);
    const auto& hh = scaled.h;
    auto sys = matching_system(hh);
    const int k = *hh.uniformity();
    const int d = std::max(hh.max_degree(), 2);
    Complex omega = options.omega ? *options.omega : Complex(default_matching_omega(hh));
    if (is_zero(omega)) {
        fail(ErrorKind::InvalidInput, "omega must be nonzero");
    }
    std::vector<Complex> w(hh.edge_count());
    double worst = 0.0;
    for (int e = 0; e < hh.edge_count(); ++e) {
        if (sys.y[e]) {
            w[e] = omega;
        } else {
            w[e] = hh.a[e] / omega;
            worst = std::max(worst, std::abs(hh.a[e]));
        }
    }
    auto approx = options.approx;
    long bound = 2L * static_cast<long>(hh.matching.size());
    approx.degree_bound = approx.degree_bound ? std::min(*approx.degree_bound, bound) : bound;
    auto rep = approx_w(affine_shift(sys, std::move(w)), approx);
    const double limit = kBeta * kBeta / (static_cast<double>(d) * d * k);
    if (worst > limit) {
        rep.warnings.push_back("off-matching weights exceed beta^2 / (d^2 k) after rescaling");
    }
    rep.value *= scaled.factor;
    rep.factor *= scaled.factor;
    return rep;
}

Hypergraph permanent_hypergraph(const std::vector<std::vector<Complex>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<int>> edges;
    std::vector<Complex> weights;
    std::vector<int> matching;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) {
            fail(ErrorKind::InvalidInput, "permanent needs a square matrix");
        }
        for (int j = 0; j < n; ++j) {
            if (is_zero(m[i][j])) {
                if (i == j) {
                    fail(ErrorKind::ZeroWeightOnMatching,
                         "diagonal entry " + std::to_string(i + 1) + " is zero; permute the matrix first");
                }
                continue;
            }
            if (i == j) {
                matching.push_back(static_cast<int>(edges.size()));
            }
            edges.push_back({i, n + j});
            weights.push_back(m[i][j]);
        }
    }
    return Hypergraph(2 * n, std::move(edges), std::move(weights), std::move(matching));
}

ApproxReport permanent_weight(const std::vector<std::vector<Complex>>& m, const MatchingOptions& options) {
    if (m.empty()) {
        ApproxReport rep;
        rep.value = 1.0;
        rep.sigma = {0.0};
        rep.coefficients = {0.0};
        return rep;
    }
    return matching_weight(permanent_hypergraph(m), options);
}

AffineSystem HomSystem::affine() const {
    if (!y) {
        fail(ErrorKind::InvalidInput, "a known homomorphism is required");
    }
    return AffineSystem(a, b, *y);
}

bool is_homomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != g1.size()) {
        return false;
    }
    for (int v : phi) {
        if (v < 0 || v >= g2.size()) {
            return false;
        }
    }
    for (auto [u, v] : g1.edges()) {
        if (!g2.adjacent(phi[u], phi[v])) {
            return false;
        }
    }
    return true;
}

HomSystem hom_system(const HomInput& inp) {
    const Graph& g1 = inp.g1;
    const Graph& g2 = inp.g2;
    if (g1.size() == 0 || g1.edges().empty()) {
        fail(ErrorKind::InvalidInput, "the source graph needs at least one edge");
    }
    if (g1.has_loops()) {
        fail(ErrorKind::InvalidInput, "the source graph must not have loops");
    }
    if (!g1.connected() || !g2.connected()) {
        fail(ErrorKind::InvalidInput, "both graphs must be connected");
    }
    if (inp.anchor < 0 || inp.anchor >= g1.size()) {
        fail(ErrorKind::InvalidInput, "anchor vertex is out of range");
    }
    if (inp.target < 0 || inp.target >= g2.size()) {
        fail(ErrorKind::InvalidInput, "anchor target is out of range");
    }
    if (inp.anchored && g2.degree(inp.target) == 0) {
        fail(ErrorKind::InvalidInput, "anchor target has no neighbors; there is no homomorphism");
    }

    HomSystem sys;
    const int n2 = g2.size();
    std::map<std::pair<int, int>, int> edge_index;
    // first[e][i]: columns of edge e whose first image is i; second[e][j] likewise.
    std::vector<std::vector<std::vector<int>>> first, second;
    for (auto [u, v] : g1.edges()) {
        int e = static_cast<int>(edge_index.size());
        edge_index[{u, v}] = e;
        first.emplace_back(n2);
        second.emplace_back(n2);
        for (int i = 0; i < n2; ++i) {
            for (int j = 0; j < n2; ++j) {
                if (g2.adjacent(i, j)) {
                    int col = static_cast<int>(sys.vars.size());
                    sys.vars.push_back({u, v, i, j});
                    first[e][i].push_back(col);
                    second[e][j].push_back(col);
                }
            }
        }
    }
    // Columns of S^{u,w}_i: the edge {u,w} maps u to i.
    auto s_cols = [&](int u, int w, int i) -> const std::vector<int>& {
        if (u < w) {
            return first[edge_index.at({u, w})][i];
        }
        return second[edge_index.at({w, u})][i];
    };

    std::vector<Triplet> entries;
    int row = 0;
    auto add_row = [&](const std::vector<std::pair<int, long>>& terms, long rhs) {
        if (terms.empty()) {
            if (rhs != 0) {
                fail(ErrorKind::InvalidInput, "the system has no solution");
            }
            return;
        }
        for (auto [col, value] : terms) {
            entries.push_back({row, col, value});
        }
        sys.b.push_back(rhs);
        ++row;
    };

    for (int u = 0; u < g1.size(); ++u) {
        if (inp.anchored && u == inp.anchor) {
            continue;
        }
        std::vector<int> order;
        if (g1.adjacent(u, inp.anchor)) {
            order.push_back(inp.anchor);
        }
        for (int v : g1.neighbors(u)) {
            if (v != inp.anchor) {
                order.push_back(v);
            }
        }
        for (size_t t = 0; t + 1 < order.size(); ++t) {
            for (int i = 0; i < n2; ++i) {
                std::vector<std::pair<int, long>> terms;
                for (int col : s_cols(u, order[t], i)) {
                    terms.push_back({col, 1});
                }
                for (int col : s_cols(u, order[t + 1], i)) {
                    terms.push_back({col, -1});
                }
                add_row(terms, 0);
            }
        }
    }
    if (inp.anchored) {
        for (int v : g1.neighbors(inp.anchor)) {
            for (int i = 0; i < n2; ++i) {
                std::vector<std::pair<int, long>> terms;
                for (int col : s_cols(inp.anchor, v, i)) {
                    terms.push_back({col, 1});
                }
                add_row(terms, i == inp.target ? 1 : 0);
            }
        }
    } else {
        int v = g1.neighbors(inp.anchor).front();
        std::vector<std::pair<int, long>> terms;
        for (int i = 0; i < n2; ++i) {
            for (int col : s_cols(inp.anchor, v, i)) {
                terms.push_back({col, 1});
            }
        }
        std::sort(terms.begin(), terms.end());
        add_row(terms, 1);
    }
    sys.a = SparseMatrix(row, static_cast<int>(sys.vars.size()), std::move(entries));
    sys.degree_bound = 2L * static_cast<long>(g1.edges().size());

    if (inp.phi) {
        const auto& phi = *inp.phi;
        if (!is_homomorphism(g1, g2, phi)) {
            fail(ErrorKind::NotAHomomorphism, "phi does not map every edge to an edge");
        }
        if (inp.anchored && phi[inp.anchor] != inp.target) {
            fail(ErrorKind::NotAHomomorphism, "phi does not send the anchor to its target");
        }
        std::vector<int> y(sys.vars.size(), 0);
        for (size_t c = 0; c < sys.vars.size(); ++c) {
            const auto& x = sys.vars[c];
            y[c] = phi[x.u] == x.i && phi[x.v] == x.j;
        }
        AffineSystem check(sys.a, sys.b, y);
        sys.y = std::move(y);
    }
    return sys;
}

std::vector<int> decode_hom(const HomSystem& sys, const std::vector<int>& x, int vertices) {
    std::vector<int> psi(vertices, -1);
    for (size_t c = 0; c < x.size() && c < sys.vars.size(); ++c) {
        if (x[c]) {
            psi[sys.vars[c].u] = sys.vars[c].i;
            psi[sys.vars[c].v] = sys.vars[c].j;
        }
    }
    return psi;
}

ApproxReport hom_sum(const HomInput& inp, Complex omega, const ApproxOptions& options) {
    if (!inp.phi) {
        fail(ErrorKind::InvalidInput, "hom_sum needs a known homomorphism phi");
    }
    auto sys = hom_system(inp);
    auto approx = options;
    approx.degree_bound = approx.degree_bound ? std::min(*approx.degree_bound, sys.degree_bound) : sys.degree_bound;
    auto inst = affine_shift(sys.affine(), std::vector<Complex>(sys.vars.size(), omega));
    return approx_w(inst, approx);
}

HomInput independence_instance(const Graph& g) {
    auto d = g.regular_degree();
    if (!d) {
        fail(ErrorKind::InvalidInput, "independence instances need a regular graph");
    }
    if (*d == 0 || g.has_loops()) {
        fail(ErrorKind::InvalidInput, "independence instances need a loopless regular graph with edges");
    }
    if (!g.connected()) {
        fail(ErrorKind::InvalidInput, "independence instances need a connected graph");
    }
    HomInput inp;
    inp.g1 = g;
    inp.g2 = Graph(2, {{0, 1}, {1, 1}});
    inp.anchor = 0;
    inp.target = 1;
    inp.phi = std::vector<int>(g.size(), 1);
    inp.anchored = false;
    return inp;
}

}  // namespace wcount
