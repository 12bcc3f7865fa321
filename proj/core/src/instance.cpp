#include "wcount/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wcount/error.hpp"

namespace wcount {

namespace {

template <class Instance>
std::vector<GaussianRational> exact_or_converted(const Instance& inst) {
    if (inst.exact_w) {
        return *inst.exact_w;
    }
    std::vector<GaussianRational> out;
    out.reserve(inst.w.size());
    for (const auto& z : inst.w) {
        out.push_back(GaussianRational::from_complex(z));
    }
    return out;
}

template <class T>
std::vector<T> pick(const std::vector<T>& values, const std::vector<int>& ids) {
    std::vector<T> out;
    out.reserve(ids.size());
    for (int j : ids) {
        out.push_back(values[j]);
    }
    return out;
}

std::vector<int> nonempty_rows(const SparseMatrix& a, const std::vector<char>& col_alive) {
    std::vector<int> rows;
    for (int i = 0; i < a.rows(); ++i) {
        bool any = false;
        for (const auto& e : a.row(i)) {
            if (col_alive[e.index]) {
                any = true;
                break;
            }
        }
        if (any) {
            rows.push_back(i);
        }
    }
    return rows;
}

std::vector<Complex> geometric_poly(Complex w, int nu) {
    std::vector<Complex> poly(static_cast<size_t>(nu) + 1);
    Complex power = 1.0;
    for (int t = 0; t <= nu; ++t) {
        poly[t] = power;
        power *= w;
    }
    return poly;
}

WeightedInstance restrict(const WeightedInstance& inst, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::optional<std::vector<GaussianRational>> exact;
    if (inst.exact_w) {
        exact = pick(*inst.exact_w, cols);
    }
    return WeightedInstance(inst.a.submatrix(rows, cols), pick(inst.w, cols), pick(inst.nu, cols), std::move(exact));
}

ModularInstance restrict(const ModularInstance& inst, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::optional<std::vector<GaussianRational>> exact;
    if (inst.exact_w) {
        exact = pick(*inst.exact_w, cols);
    }
    return ModularInstance(inst.kappa, inst.a.submatrix(rows, cols), pick(inst.w, cols), std::move(exact));
}

std::vector<Complex> zero_column_poly(const WeightedInstance& inst, int j) { return geometric_poly(inst.w[j], inst.nu[j]); }

std::vector<Complex> zero_column_poly(const ModularInstance& inst, int j) {
    return {1.0, static_cast<double>(inst.kappa - 1) * inst.w[j]};
}

bool forces_zero(const WeightedInstance&, long) { return true; }

bool forces_zero(const ModularInstance& inst, long value) {
    return std::gcd(std::abs(value), static_cast<long>(inst.kappa)) == 1;
}

template <class Instance>
Reduced<Instance> normalize_impl(const Instance& inst) {
    const auto& a = inst.a;
    std::vector<char> alive(a.cols(), 1);
    Reduced<Instance> out;
    for (int j = 0; j < a.cols(); ++j) {
        if (a.col(j).empty()) {
            out.factor.removed.push_back({j, inst.w[j], zero_column_poly(inst, j)});
        } else {
            out.kept_columns.push_back(j);
        }
    }
    out.instance = restrict(inst, nonempty_rows(a, alive), out.kept_columns);
    return out;
}

template <class Instance>
Reduced<Instance> prepare_impl(const Instance& inst) {
    Reduced<Instance> out = normalize_impl(inst);
    for (;;) {
        const auto& a = out.instance.a;
        std::vector<char> alive(a.cols(), 1);
        bool changed = false;
        for (int i = 0; i < a.rows(); ++i) {
            auto row = a.row(i);
            if (row.size() == 1 && alive[row[0].index] && forces_zero(out.instance, row[0].value)) {
                alive[row[0].index] = 0;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
        std::vector<int> cols;
        std::vector<int> kept;
        for (int j = 0; j < a.cols(); ++j) {
            if (alive[j]) {
                cols.push_back(j);
                kept.push_back(out.kept_columns[j]);
            } else {
                out.factor.removed.push_back({out.kept_columns[j], out.instance.w[j], {1.0}});
            }
        }
        Instance next = restrict(out.instance, nonempty_rows(a, alive), cols);
        out.instance = std::move(next);
        out.kept_columns = std::move(kept);
        // Dropping a forced column never empties another column, so no new zero columns appear.
    }
    return out;
}

WeightBoundReport bound_report(const std::vector<Complex>& w, const SparseMatrix& a, double constant, double extra) {
    WeightBoundReport rep;
    SparsityStats st = sparsity(a);
    double r = std::max(st.r, 2);
    double c = std::max(st.c, 1);
    rep.threshold = constant / (extra * r * std::sqrt(c));
    for (const auto& z : w) {
        double mag = std::abs(z);
        rep.magnitudes.push_back(mag);
        rep.max_magnitude = std::max(rep.max_magnitude, mag);
    }
    rep.margin = rep.threshold - rep.max_magnitude;
    rep.pass = rep.margin >= 0.0;
    return rep;
}

}  // namespace

WeightedInstance::WeightedInstance(SparseMatrix matrix, std::vector<Complex> weights, std::vector<int> caps,
                                   std::optional<std::vector<GaussianRational>> exact)
    : a(std::move(matrix)), w(std::move(weights)), nu(std::move(caps)), exact_w(std::move(exact)) {
    if (w.size() != static_cast<size_t>(a.cols()) || nu.size() != static_cast<size_t>(a.cols())) {
        fail(ErrorKind::InvalidInput, "weights and caps must have one entry per column");
    }
    if (exact_w && exact_w->size() != w.size()) {
        fail(ErrorKind::InvalidInput, "exact weights must have one entry per column");
    }
    for (size_t j = 0; j < nu.size(); ++j) {
        if (nu[j] < 1) {
            fail(ErrorKind::InvalidInput, "cap of column " + std::to_string(j + 1) + " must be at least 1");
        }
    }
}

long WeightedInstance::degree() const { return std::accumulate(nu.begin(), nu.end(), 0L); }

std::vector<GaussianRational> WeightedInstance::exact_weights() const { return exact_or_converted(*this); }

ModularInstance::ModularInstance(int modulus, const SparseMatrix& matrix, std::vector<Complex> weights,
                                 std::optional<std::vector<GaussianRational>> exact)
    : kappa(modulus), w(std::move(weights)), exact_w(std::move(exact)) {
    if (kappa < 2) {
        fail(ErrorKind::InvalidInput, "modulus must be at least 2");
    }
    if (w.size() != static_cast<size_t>(matrix.cols())) {
        fail(ErrorKind::InvalidInput, "weights must have one entry per column");
    }
    if (exact_w && exact_w->size() != w.size()) {
        fail(ErrorKind::InvalidInput, "exact weights must have one entry per column");
    }
    std::vector<Triplet> reduced;
    for (auto t : matrix.triplets()) {
        long v = ((t.value % kappa) + kappa) % kappa;
        if (v != 0) {
            t.value = v;
            reduced.push_back(t);
        }
    }
    a = SparseMatrix(matrix.rows(), matrix.cols(), std::move(reduced));
}

std::vector<GaussianRational> ModularInstance::exact_weights() const { return exact_or_converted(*this); }

Complex ZeroColumnFactor::evaluate(Complex zeta) const {
    Complex out = 1.0;
    for (const auto& f : removed) {
        Complex v = 0.0;
        for (auto it = f.poly.rbegin(); it != f.poly.rend(); ++it) {
            v = v * zeta + *it;
        }
        out *= v;
    }
    return out;
}

std::vector<Complex> ZeroColumnFactor::polynomial() const {
    std::vector<Complex> out{1.0};
    for (const auto& f : removed) {
        std::vector<Complex> next(out.size() + f.poly.size() - 1, 0.0);
        for (size_t i = 0; i < out.size(); ++i) {
            for (size_t j = 0; j < f.poly.size(); ++j) {
                next[i + j] += out[i] * f.poly[j];
            }
        }
        out = std::move(next);
    }
    return out;
}

long ZeroColumnFactor::degree() const {
    long d = 0;
    for (const auto& f : removed) {
        d += static_cast<long>(f.poly.size()) - 1;
    }
    return d;
}

Reduced<WeightedInstance> normalize(const WeightedInstance& inst) { return normalize_impl(inst); }
Reduced<ModularInstance> normalize(const ModularInstance& inst) { return normalize_impl(inst); }
Reduced<WeightedInstance> prepare(const WeightedInstance& inst) { return prepare_impl(inst); }
Reduced<ModularInstance> prepare(const ModularInstance& inst) { return prepare_impl(inst); }

SparsityStats sparsity(const SparseMatrix& a) {
    SparsityStats st;
    for (int i = 0; i < a.rows(); ++i) {
        st.r = std::max(st.r, static_cast<int>(a.row(i).size()));
    }
    for (int j = 0; j < a.cols(); ++j) {
        st.c = std::max(st.c, static_cast<int>(a.col(j).size()));
    }
    st.d = static_cast<long>(st.r) * st.c;
    return st;
}

WeightBoundReport weight_bound_check(const WeightedInstance& inst, double constant) {
    return bound_report(inst.w, inst.a, constant, 1.0);
}

WeightBoundReport weight_bound_check(const ModularInstance& inst, double constant) {
    return bound_report(inst.w, inst.a, constant, inst.kappa - 1.0);
}

size_t ColumnGraph::max_degree() const {
    size_t d = 0;
    for (const auto& nb : adj) {
        d = std::max(d, nb.size());
    }
    return d;
}

size_t ColumnGraph::edge_count() const {
    size_t e = 0;
    for (const auto& nb : adj) {
        e += nb.size();
    }
    return e / 2;
}

ColumnGraph column_graph(const SparseMatrix& a) {
    ColumnGraph g;
    g.adj.resize(a.cols());
    std::vector<int> stamp(a.cols(), -1);
    for (int j = 0; j < a.cols(); ++j) {
        stamp[j] = j;
        for (const auto& re : a.col(j)) {
            for (const auto& ce : a.row(re.index)) {
                if (stamp[ce.index] != j) {
                    stamp[ce.index] = j;
                    g.adj[j].push_back(ce.index);
                }
            }
        }
        std::sort(g.adj[j].begin(), g.adj[j].end());
    }
    return g;
}

}  // namespace wcount
