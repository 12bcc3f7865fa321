#include "wcount/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "wcount/error.hpp"

namespace wcount {

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) {
        fail(ErrorKind::InvalidInput, "empty range");
    }
    const uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        uint64_t x = next();
        if (x >= reject) {
            return x % bound;
        }
    }
}

int Rng::between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Complex Rng::phase() { return std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi)); }

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    // splitmix64 finalizer
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

struct Pattern {
    int rows = 0;
    std::vector<std::vector<int>> row_cols;
};

Pattern random_pattern(Rng& rng, int n, int m, int r, int c) {
    if (n < 2 || m < 1 || r < 2 || c < 1) {
        fail(ErrorKind::InvalidInput, "random instances need n >= 2, m >= 1, r >= 2, c >= 1");
    }
    Pattern p;
    std::vector<int> load(n, 0);
    for (int i = 0; i < m; ++i) {
        std::vector<int> open;
        for (int j = 0; j < n; ++j) {
            if (load[j] < c) {
                open.push_back(j);
            }
        }
        if (open.size() < 2) {
            break;
        }
        int size = rng.between(2, std::min<int>(r, static_cast<int>(open.size())));
        rng.shuffle(open);
        open.resize(size);
        std::sort(open.begin(), open.end());
        for (int j : open) {
            ++load[j];
        }
        p.row_cols.push_back(std::move(open));
        ++p.rows;
    }
    return p;
}

/// Drop columns without entries, renumbering the rest.
SparseMatrix compact(int rows, int n, const std::vector<Triplet>& entries) {
    std::vector<int> index(n, -1);
    for (const auto& t : entries) {
        index[t.col] = 0;
    }
    int next = 0;
    for (auto& v : index) {
        if (v == 0) {
            v = next++;
        }
    }
    std::vector<Triplet> out;
    out.reserve(entries.size());
    for (const auto& t : entries) {
        out.push_back({t.row, index[t.col], t.value});
    }
    return SparseMatrix(rows, next, std::move(out));
}

std::vector<Complex> random_weights(Rng& rng, int n, double radius, bool exact, bool complex_weights) {
    std::vector<Complex> w(n);
    for (auto& x : w) {
        double mag = exact ? radius : rng.uniform(0.0, radius);
        x = complex_weights ? mag * rng.phase() : Complex(rng.coin() ? mag : -mag);
    }
    return w;
}

double weight_radius(const SparseMatrix& a, double constant) {
    auto st = sparsity(a);
    return constant / (std::max(st.r, 2) * std::sqrt(static_cast<double>(std::max(st.c, 1))));
}

}  // namespace

WeightedInstance random_instance(Rng& rng, const InstanceParams& params) {
    auto pattern = random_pattern(rng, params.n, params.m, params.r, params.c);
    std::vector<Triplet> entries;
    for (int i = 0; i < pattern.rows; ++i) {
        const auto& cols = pattern.row_cols[i];
        std::vector<int> sign(cols.size(), 1);
        sign[1] = -1;
        for (size_t t = 2; t < cols.size(); ++t) {
            sign[t] = rng.coin() ? 1 : -1;
        }
        rng.shuffle(sign);
        for (size_t t = 0; t < cols.size(); ++t) {
            entries.push_back({i, cols[t], sign[t] * rng.between(1, params.coeff_max)});
        }
    }
    SparseMatrix a = compact(pattern.rows, params.n, entries);
    std::vector<int> nu(a.cols());
    for (auto& v : nu) {
        v = rng.between(1, params.nu_max);
    }
    double radius = params.scale * weight_radius(a, kBeta);
    auto w = random_weights(rng, a.cols(), radius, params.exact_magnitude, params.complex_weights);
    return WeightedInstance(std::move(a), std::move(w), std::move(nu));
}

WeightedInstance direct_sum(const WeightedInstance& x, const WeightedInstance& y) {
    auto w = x.w;
    w.insert(w.end(), y.w.begin(), y.w.end());
    auto nu = x.nu;
    nu.insert(nu.end(), y.nu.begin(), y.nu.end());
    std::optional<std::vector<GaussianRational>> exact;
    if (x.exact_w || y.exact_w) {
        auto e = x.exact_weights();
        auto f = y.exact_weights();
        e.insert(e.end(), f.begin(), f.end());
        exact = std::move(e);
    }
    return WeightedInstance(SparseMatrix::direct_sum(x.a, y.a), std::move(w), std::move(nu), std::move(exact));
}

WeightedInstance scaling_instance(Rng& rng, int n, double weight_scale, double rewire) {
    if (n < 6) {
        fail(ErrorKind::InvalidInput, "scaling instances need n >= 6");
    }
    // Stubs of block b are the columns 6b..6b+5 (the last block absorbs the remainder).
    std::vector<int> stubs(3 * static_cast<size_t>(n));
    for (size_t t = 0; t < stubs.size(); ++t) {
        stubs[t] = static_cast<int>(t / 3);
    }
    const size_t block = 18;
    for (size_t lo = 0; lo < stubs.size(); lo += block) {
        size_t hi = stubs.size() - lo < 2 * block ? stubs.size() : lo + block;
        for (size_t i = hi - lo; i > 1; --i) {
            std::swap(stubs[lo + i - 1], stubs[lo + rng.below(i)]);
        }
        if (hi == stubs.size()) {
            break;
        }
    }
    for (size_t t = 0; t < stubs.size(); t += 3) {
        if (rng.unit() < rewire) {
            std::swap(stubs[t + rng.below(3)], stubs[rng.below(stubs.size())]);
        }
    }
    auto clash = [&](size_t t) {
        size_t base = t - t % 3;
        for (size_t s = base; s < base + 3; ++s) {
            if (s != t && stubs[s] == stubs[t]) {
                return true;
            }
        }
        return false;
    };
    // Swap repeated columns out of their rows until every row has three distinct columns.
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (size_t t = 0; t < stubs.size(); ++t) {
            if (clash(t)) {
                std::swap(stubs[t], stubs[rng.below(stubs.size())]);
                dirty = true;
            }
        }
    }
    std::vector<Triplet> entries;
    for (int i = 0; i < n; ++i) {
        int s[3];
        for (auto& v : s) {
            v = rng.coin() ? 1 : -1;
        }
        if (s[0] == s[1] && s[1] == s[2]) {
            s[rng.below(3)] *= -1;
        }
        for (int t = 0; t < 3; ++t) {
            entries.push_back({i, stubs[3 * i + t], s[t]});
        }
    }
    SparseMatrix a(n, n, std::move(entries));
    double radius = weight_scale * weight_radius(a, kBeta);
    auto w = random_weights(rng, n, radius, true, true);
    return WeightedInstance(std::move(a), std::move(w), std::vector<int>(n, 1));
}

ModularInstance random_code(Rng& rng, const CodeParams& params) {
    if (params.kappa < 2) {
        fail(ErrorKind::InvalidInput, "modulus must be at least 2");
    }
    auto pattern = random_pattern(rng, params.n, params.m, params.r, params.c);
    std::vector<Triplet> entries;
    for (int i = 0; i < pattern.rows; ++i) {
        for (int j : pattern.row_cols[i]) {
            entries.push_back({i, j, rng.between(1, params.kappa - 1)});
        }
    }
    SparseMatrix a = compact(pattern.rows, params.n, entries);
    double radius = params.scale * weight_radius(a, kBeta) / (params.kappa - 1);
    auto w = random_weights(rng, a.cols(), radius, params.exact_magnitude, params.complex_weights);
    return ModularInstance(params.kappa, a, std::move(w));
}

Graph random_connected_graph(Rng& rng, int n, double p, double loop_p) {
    Graph g(n);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) {
        order[v] = v;
    }
    rng.shuffle(order);
    for (int t = 1; t < n; ++t) {
        g.add_edge(order[t], order[rng.below(t)]);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v) && rng.unit() < p) {
                g.add_edge(u, v);
            }
        }
        if (rng.unit() < loop_p) {
            g.add_edge(u, u);
        }
    }
    return g;
}

Graph random_regular_graph(Rng& rng, int n, int d) {
    if (d < 1 || d >= n || (n * d) % 2 != 0) {
        fail(ErrorKind::InvalidInput, "no simple connected d-regular graph with these parameters");
    }
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v) {
            stubs.insert(stubs.end(), d, v);
        }
        rng.shuffle(stubs);
        Graph g(n);
        bool ok = true;
        for (size_t t = 0; t < stubs.size() && ok; t += 2) {
            int u = stubs[t], v = stubs[t + 1];
            if (u == v || g.adjacent(u, v)) {
                ok = false;
            } else {
                g.add_edge(u, v);
            }
        }
        if (ok && g.connected()) {
            return g;
        }
    }
    fail(ErrorKind::InvalidInput, "could not sample a connected regular graph");
}

Hypergraph random_hypergraph(Rng& rng, int k, int parts, int extra, double off_scale) {
    if (k < 1 || parts < 1) {
        fail(ErrorKind::InvalidInput, "hypergraphs need k >= 1 and at least one part");
    }
    const int n = k * parts;
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) {
        perm[v] = v;
    }
    rng.shuffle(perm);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> edges;
    std::vector<Complex> weights;
    std::vector<int> matching;
    for (int t = 0; t < parts; ++t) {
        std::vector<int> e(perm.begin() + t * k, perm.begin() + (t + 1) * k);
        std::sort(e.begin(), e.end());
        seen.insert(e);
        matching.push_back(static_cast<int>(edges.size()));
        edges.push_back(std::move(e));
        weights.push_back(rng.uniform(0.5, 2.0) * rng.phase());
    }
    for (int tries = 0; static_cast<int>(edges.size()) < parts + extra && tries < 100 * (extra + 1); ++tries) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) {
            all[v] = v;
        }
        rng.shuffle(all);
        std::vector<int> e(all.begin(), all.begin() + k);
        std::sort(e.begin(), e.end());
        if (!seen.insert(e).second) {
            continue;
        }
        edges.push_back(std::move(e));
        weights.push_back(rng.uniform(0.0, off_scale) * rng.phase());
    }
    // Interleave the matching among the other edges.
    std::vector<int> order(edges.size());
    for (size_t e = 0; e < order.size(); ++e) {
        order[e] = static_cast<int>(e);
    }
    rng.shuffle(order);
    std::vector<std::vector<int>> shuffled(edges.size());
    std::vector<Complex> shuffled_w(edges.size());
    std::vector<int> where(edges.size());
    for (size_t t = 0; t < order.size(); ++t) {
        shuffled[t] = edges[order[t]];
        shuffled_w[t] = weights[order[t]];
        where[order[t]] = static_cast<int>(t);
    }
    for (auto& e : matching) {
        e = where[e];
    }
    std::sort(matching.begin(), matching.end());
    return Hypergraph(n, std::move(shuffled), std::move(shuffled_w), std::move(matching));
}

std::vector<std::vector<Complex>> random_permanent_matrix(Rng& rng, int n, double e_max) {
    std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 1.0;
    }
    if (n < 2) {
        return m;
    }
    std::vector<int> target(n);
    for (int i = 0; i < n; ++i) {
        target[i] = i;
    }
    rng.shuffle(target);
    for (int i = 0; i < n; ++i) {
        if (target[i] != i && rng.unit() < 0.8) {
            m[i][target[i]] = rng.uniform(0.0, e_max) * rng.phase();
        }
    }
    return m;
}

}  // namespace wcount
