#include "wcount_checks/reference.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "wcount/error.hpp"

namespace wcount::reference {

namespace {

/// Advance an odometer with digit limits `top`; false after the last state.
bool advance(std::vector<int>& x, const std::vector<int>& top) {
    for (size_t j = 0; j < x.size(); ++j) {
        if (x[j] < top[j]) {
            ++x[j];
            return true;
        }
        x[j] = 0;
    }
    return false;
}

bool solves(const SparseMatrix& a, const std::vector<int>& x) {
    for (int i = 0; i < a.rows(); ++i) {
        long s = 0;
        for (int j = 0; j < a.cols(); ++j) {
            s += a.at(i, j) * x[j];
        }
        if (s != 0) {
            return false;
        }
    }
    return true;
}

GaussianRational power(const GaussianRational& w, int e) {
    GaussianRational out(1);
    for (int t = 0; t < e; ++t) {
        out *= w;
    }
    return out;
}

/// Depth-first search over 0-1 vectors with Ax = b, pruning rows by the range still reachable.
/// Columns are visited so that rows close as early as possible.
template <class Visit>
class ZeroOneSearch {
public:
    ZeroOneSearch(const SparseMatrix& a, const std::vector<long>& b, Visit& visit)
        : a_(a), b_(b), visit_(visit), x_(a.cols(), 0), partial_(a.rows(), 0), pos_(a.rows(), 0),
          neg_(a.rows(), 0) {
        for (const auto& t : a.triplets()) {
            (t.value > 0 ? pos_[t.row] : neg_[t.row]) += t.value;
        }
        std::vector<int> open(a.rows(), 0);
        for (const auto& t : a.triplets()) {
            ++open[t.row];
        }
        std::vector<bool> used(a.cols(), false);
        for (int step = 0; step < a.cols(); ++step) {
            int best = -1;
            int best_key = 0;
            for (int j = 0; j < a.cols(); ++j) {
                if (used[j]) {
                    continue;
                }
                int key = a.rows() + a.cols() + 1;
                for (const auto& e : a.col(j)) {
                    key = std::min(key, open[e.index]);
                }
                if (best < 0 || key < best_key) {
                    best = j;
                    best_key = key;
                }
            }
            used[best] = true;
            order_.push_back(best);
            for (const auto& e : a.col(best)) {
                --open[e.index];
            }
        }
    }

    void run() {
        for (int i = 0; i < a_.rows(); ++i) {
            if (!feasible(i)) {
                return;
            }
        }
        walk(0);
    }

private:
    bool feasible(int i) const { return partial_[i] + neg_[i] <= b_[i] && b_[i] <= partial_[i] + pos_[i]; }

    void walk(int step) {
        if (step == a_.cols()) {
            visit_(x_);
            return;
        }
        const int j = order_[step];
        auto col = a_.col(j);
        for (const auto& e : col) {
            (e.value > 0 ? pos_[e.index] : neg_[e.index]) -= e.value;
        }
        for (int v = 0; v <= 1; ++v) {
            for (const auto& e : col) {
                partial_[e.index] += e.value * v;
            }
            bool ok = true;
            for (const auto& e : col) {
                ok = ok && feasible(e.index);
            }
            if (ok) {
                x_[j] = v;
                walk(step + 1);
            }
            for (const auto& e : col) {
                partial_[e.index] -= e.value * v;
            }
        }
        x_[j] = 0;
        for (const auto& e : col) {
            (e.value > 0 ? pos_[e.index] : neg_[e.index]) += e.value;
        }
    }

    const SparseMatrix& a_;
    const std::vector<long>& b_;
    Visit& visit_;
    std::vector<int> x_;
    std::vector<long> partial_, pos_, neg_;
    std::vector<int> order_;
};

}  // namespace

std::vector<std::vector<int>> column_graph_pairs(const SparseMatrix& a) {
    std::vector<std::vector<int>> adj(a.cols());
    for (int p = 0; p < a.cols(); ++p) {
        for (int q = 0; q < a.cols(); ++q) {
            if (p == q) {
                continue;
            }
            for (int i = 0; i < a.rows(); ++i) {
                if (a.at(i, p) != 0 && a.at(i, q) != 0) {
                    adj[p].push_back(q);
                    break;
                }
            }
        }
    }
    return adj;
}

std::vector<std::vector<int>> connected_subsets(const std::vector<std::vector<int>>& adj, int k) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size > k) {
            continue;
        }
        int start = std::countr_zero(mask);
        uint32_t reached = 1u << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v]) {
                if ((mask >> u & 1) && !(reached >> u & 1)) {
                    reached |= 1u << u;
                    stack.push_back(u);
                }
            }
        }
        if (reached == mask) {
            std::vector<int> set;
            for (int v = 0; v < n; ++v) {
                if (mask >> v & 1) {
                    set.push_back(v);
                }
            }
            out.push_back(std::move(set));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> box_points(const WeightedInstance& inst) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(inst.cols(), 0);
    do {
        if (solves(inst.a, x)) {
            out.push_back(x);
        }
    } while (advance(x, inst.nu));
    return out;
}

std::vector<GaussianRational> pi_exact(const WeightedInstance& inst, int s) {
    auto w = inst.exact_weights();
    std::vector<GaussianRational> pi(static_cast<size_t>(s) + 1);
    for (const auto& x : box_points(inst)) {
        int degree = std::accumulate(x.begin(), x.end(), 0);
        if (degree > s) {
            continue;
        }
        GaussianRational term(1);
        for (size_t j = 0; j < x.size(); ++j) {
            term *= power(w[j], x[j]);
        }
        pi[degree] += term;
    }
    return pi;
}

std::vector<GaussianRational> sigma_exact(const WeightedInstance& inst, int k) {
    auto pi = pi_exact(inst, k);
    std::vector<GaussianRational> sigma(static_cast<size_t>(k) + 1);
    for (int m = 1; m <= k; ++m) {
        GaussianRational acc = GaussianRational(-m) * pi[m];
        for (int i = 1; i < m; ++i) {
            acc -= pi[m - i] * sigma[i];
        }
        sigma[m] = acc;
    }
    return sigma;
}

WeightedInstance column_restriction(const WeightedInstance& inst, const std::vector<int>& cols) {
    std::vector<int> rows;
    for (int i = 0; i < inst.rows(); ++i) {
        for (int j : cols) {
            if (inst.a.at(i, j) != 0) {
                rows.push_back(i);
                break;
            }
        }
    }
    std::vector<Triplet> entries;
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < cols.size(); ++c) {
            long v = inst.a.at(rows[r], cols[c]);
            if (v != 0) {
                entries.push_back({static_cast<int>(r), static_cast<int>(c), v});
            }
        }
    }
    std::vector<Complex> w;
    std::vector<int> nu;
    std::vector<GaussianRational> exact;
    auto all = inst.exact_weights();
    for (int j : cols) {
        w.push_back(inst.w[j]);
        nu.push_back(inst.nu[j]);
        exact.push_back(all[j]);
    }
    return WeightedInstance(SparseMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()), entries), w,
                            nu, exact);
}

std::vector<GaussianRational> mu_inclusion_exclusion(const WeightedInstance& inst, const std::vector<int>& cols,
                                                     int k) {
    const int size = static_cast<int>(cols.size());
    std::vector<GaussianRational> mu(static_cast<size_t>(k) + 1);
    for (uint32_t mask = 1; mask < (1u << size); ++mask) {
        std::vector<int> sub;
        for (int t = 0; t < size; ++t) {
            if (mask >> t & 1) {
                sub.push_back(cols[t]);
            }
        }
        auto sigma = sigma_exact(column_restriction(inst, sub), k);
        const bool negative = (size - std::popcount(mask)) % 2 != 0;
        for (int m = 1; m <= k; ++m) {
            if (negative) {
                mu[m] -= sigma[m];
            } else {
                mu[m] += sigma[m];
            }
        }
    }
    return mu;
}

std::vector<std::vector<int>> modular_codewords(const ModularInstance& inst) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(inst.cols(), 0);
    std::vector<int> top(inst.cols(), inst.kappa - 1);
    do {
        bool ok = true;
        for (int i = 0; i < inst.rows() && ok; ++i) {
            long s = 0;
            for (int j = 0; j < inst.cols(); ++j) {
                s += inst.a.at(i, j) * x[j];
            }
            ok = s % inst.kappa == 0;
        }
        if (ok) {
            out.push_back(x);
        }
    } while (advance(x, top));
    return out;
}

std::vector<mpz_class> row_space_enumerator(const SparseMatrix& a, int p) {
    std::set<std::vector<int>> words;
    std::vector<int> coeff(a.rows(), 0);
    std::vector<int> top(a.rows(), p - 1);
    do {
        std::vector<int> word(a.cols(), 0);
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) {
                word[j] = static_cast<int>(((word[j] + coeff[i] * a.at(i, j)) % p + p) % p);
            }
        }
        words.insert(word);
    } while (advance(coeff, top));
    std::vector<mpz_class> out(static_cast<size_t>(a.cols()) + 1, 0);
    for (const auto& word : words) {
        out[std::count_if(word.begin(), word.end(), [](int v) { return v != 0; })] += 1;
    }
    return out;
}

Complex permanent(const std::vector<std::vector<Complex>>& m) {
    const size_t n = m.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total = 0.0;
    do {
        Complex term = 1.0;
        for (size_t i = 0; i < n; ++i) {
            term *= m[i][perm[i]];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Complex matching_sum(const Hypergraph& h) {
    const int e = h.edge_count();
    if (e > 24) {
        fail(ErrorKind::EnumerationLimitExceeded, "too many edges for exhaustive matching enumeration");
    }
    Complex total = 0.0;
    for (uint32_t mask = 0; mask < (1u << e); ++mask) {
        std::vector<int> cover(h.n, 0);
        Complex term = 1.0;
        for (int t = 0; t < e; ++t) {
            if (mask >> t & 1) {
                term *= h.a[t];
                for (int v : h.edges[t]) {
                    ++cover[v];
                }
            }
        }
        if (std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; })) {
            total += term;
        }
    }
    return total;
}

std::vector<std::vector<int>> homomorphisms(const Graph& g1, const Graph& g2, int anchor, int target) {
    std::vector<std::vector<int>> out;
    if (g2.size() == 0) {
        return out;
    }
    std::vector<int> psi(g1.size(), 0);
    std::vector<int> top(g1.size(), g2.size() - 1);
    do {
        if (anchor >= 0 && psi[anchor] != target) {
            continue;
        }
        bool ok = true;
        for (auto [u, v] : g1.edges()) {
            ok = ok && g2.adjacent(psi[u], psi[v]);
        }
        if (ok) {
            out.push_back(psi);
        }
    } while (advance(psi, top));
    return out;
}

Complex hom_distance_sum(const Graph& g1, const Graph& g2, const std::vector<int>& phi, Complex omega, int anchor,
                         int target) {
    Complex total = 0.0;
    for (const auto& psi : homomorphisms(g1, g2, anchor, target)) {
        int d = 0;
        for (auto [u, v] : g1.edges()) {
            d += psi[u] != phi[u] || psi[v] != phi[v];
        }
        total += std::pow(omega, 2 * d);
    }
    return total;
}

Complex independence_polynomial(const Graph& g, Complex lambda) {
    Complex total = 0.0;
    for (uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
        bool independent = true;
        for (auto [u, v] : g.edges()) {
            independent = independent && !((mask >> u & 1) && (mask >> v & 1));
        }
        if (independent) {
            total += std::pow(lambda, std::popcount(mask));
        }
    }
    return total;
}

uint64_t count_01_solutions(const SparseMatrix& a, const std::vector<long>& b) {
    uint64_t count = 0;
    auto visit = [&](const std::vector<int>&) { ++count; };
    ZeroOneSearch<decltype(visit)> search(a, b, visit);
    search.run();
    return count;
}

Complex hamming_weight_sum(const SparseMatrix& a, const std::vector<long>& b, const std::vector<int>& y,
                           const std::vector<Complex>& w) {
    Complex total = 0.0;
    auto visit = [&](const std::vector<int>& x) {
        Complex term = 1.0;
        for (size_t j = 0; j < x.size(); ++j) {
            if (x[j] != y[j]) {
                term *= w[j];
            }
        }
        total += term;
    };
    ZeroOneSearch<decltype(visit)> search(a, b, visit);
    search.run();
    return total;
}

}  // namespace wcount::reference
