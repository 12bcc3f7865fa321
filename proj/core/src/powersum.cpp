#include "wcount/powersum.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <type_traits>
#include <unordered_map>

#include "wcount/connected_subsets.hpp"
#include "wcount/error.hpp"
#include "wcount/submatrix.hpp"

namespace wcount {

namespace {

constexpr int kMaxLocal = 63;

double magnitude(const Complex& z) { return std::abs(z); }
double magnitude(const GaussianRational& z) { return std::abs(z.to_complex()); }

/// Immutable description of the parent system shared by all workers.
template <class S>
struct Parent {
    explicit Parent(const SparseMatrix& matrix) : a(matrix) {}

    const SparseMatrix& a;
    bool modular = false;
    int kappa = 0;
    std::vector<int> nu;
    int k_max = 0;
    int max_set = 0;
    ColumnGraph graph;
    std::vector<std::vector<S>> powers;  // powers[j][t] = w_j^t
    FastOptions options;

    // Row-balance categories: integer mode splits positive / negative entries,
    // modular mode splits units / non-units mod kappa.
    int category(long value) const {
        if (modular) {
            return std::gcd(std::abs(value), static_cast<long>(kappa)) == 1 ? 0 : 1;
        }
        return value > 0 ? 0 : 1;
    }

    bool balanced(int c0, int c1) const {
        if (modular) {
            return c0 + c1 != 1 || c1 > 0;
        }
        return (c0 == 0) == (c1 == 0);
    }
};

struct LocalRow {
    uint64_t mask = 0;
    uint64_t cat0 = 0;
    uint64_t cat1 = 0;
};

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (int x : v) {
            h = (h ^ static_cast<uint32_t>(x)) * 1099511628211ull;
        }
        return static_cast<size_t>(h ^ (h >> 29));
    }
};

template <class Key>
struct KeyMap {
    using type = std::unordered_map<Key, int32_t>;
};

template <>
struct KeyMap<std::vector<int>> {
    using type = std::unordered_map<std::vector<int>, int32_t, VecHash>;
};

constexpr int32_t kUnknown = -2;
constexpr int32_t kZero = -1;

template <class S, class Key>
class Worker {
public:
    explicit Worker(const Parent<S>& p)
        : p_(p), stride_(static_cast<size_t>(p.k_max) + 1), row_slot_(p.a.rows(), -1), row_c0_(p.a.rows(), 0),
          row_c1_(p.a.rows(), 0) {}

    // Hooks for the connected-set walker.
    void enter(int v) {
        for (const auto& e : p_.a.col(v)) {
            bool before = p_.balanced(row_c0_[e.index], row_c1_[e.index]);
            (p_.category(e.value) == 0 ? row_c0_ : row_c1_)[e.index]++;
            bool after = p_.balanced(row_c0_[e.index], row_c1_[e.index]);
            unbalanced_ += static_cast<int>(before) - static_cast<int>(after);
        }
    }

    void leave(int v) {
        for (const auto& e : p_.a.col(v)) {
            bool before = p_.balanced(row_c0_[e.index], row_c1_[e.index]);
            (p_.category(e.value) == 0 ? row_c0_ : row_c1_)[e.index]--;
            bool after = p_.balanced(row_c0_[e.index], row_c1_[e.index]);
            unbalanced_ += static_cast<int>(before) - static_cast<int>(after);
        }
    }

    void emit(std::span<const int> set) {
        ++enumerated_;
        ++by_size_[set.size()];
        if (p_.options.prune && unbalanced_ > 0) {
            return;
        }
        evaluate_top(set);
    }

    void run_anchor(int anchor, std::vector<S>& partial) {
        partial_ = &partial;
        if (by_size_.empty()) {
            by_size_.assign(static_cast<size_t>(p_.max_set) + 1, 0);
        }
        if (p_.options.include_disconnected) {
            std::vector<int> set{anchor};
            all_subsets(anchor + 1, set);
        } else {
            if (!walker_) {
                walker_ = std::make_unique<ConnectedSetWalker<Worker>>(p_.graph, p_.max_set, *this);
            }
            walker_->run_anchor(anchor);
        }
        partial_ = nullptr;
    }

    uint64_t enumerated() const { return enumerated_; }
    const std::vector<uint64_t>& by_size() const { return by_size_; }
    uint64_t evaluated() const { return evaluated_; }
    uint64_t pairs_verified() const { return pairs_verified_; }
    double max_disconnected() const { return max_disconnected_; }
    std::vector<MuEntry<S>>& table() { return table_; }

private:
    void all_subsets(int from, std::vector<int>& set) {
        emit(set);
        if (static_cast<int>(set.size()) == p_.max_set) {
            return;
        }
        for (int v = from; v < p_.a.cols(); ++v) {
            set.push_back(v);
            all_subsets(v + 1, set);
            set.pop_back();
        }
    }

    void evaluate_top(std::span<const int> set) {
        build_local(set);
        uint64_t full = t_ == 64 ? ~0ull : ((1ull << t_) - 1);
        int32_t off = mu(full);
        if (off < 0) {
            return;
        }
        for (int k = 1; k <= p_.k_max; ++k) {
            (*partial_)[k] += mu_pool_[off + k];
        }
    }

    void build_local(std::span<const int> set) {
        t_ = static_cast<int>(set.size());
        std::copy(set.begin(), set.end(), cols_);
        std::sort(cols_, cols_ + t_);
        rows_.clear();
        row_ids_.clear();
        for (int q = 0; q < t_; ++q) {
            col_rows_[q].clear();
            adj_[q] = 0;
        }
        for (int q = 0; q < t_; ++q) {
            for (const auto& e : p_.a.col(cols_[q])) {
                int& slot = row_slot_[e.index];
                if (slot < 0) {
                    slot = static_cast<int>(rows_.size());
                    rows_.push_back({});
                    row_ids_.push_back(e.index);
                }
                LocalRow& r = rows_[slot];
                uint64_t bit = 1ull << q;
                r.mask |= bit;
                (p_.category(e.value) == 0 ? r.cat0 : r.cat1) |= bit;
                col_rows_[q].push_back({slot, e.value});
            }
        }
        for (int id : row_ids_) {
            row_slot_[id] = -1;
        }
        for (const auto& r : rows_) {
            for (uint64_t m = r.mask; m; m &= m - 1) {
                adj_[std::countr_zero(m)] |= r.mask;
            }
        }
        for (int q = 0; q < t_; ++q) {
            adj_[q] &= ~(1ull << q);
        }
    }

    bool closed(uint64_t d) const {
        for (const auto& r : rows_) {
            if (r.mask & d) {
                int c0 = std::popcount(r.cat0 & d);
                int c1 = std::popcount(r.cat1 & d);
                if (!p_.balanced(c0, c1)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool connected(uint64_t d) const {
        uint64_t seen = d & (~d + 1);
        uint64_t frontier = seen;
        while (frontier) {
            uint64_t next = 0;
            for (uint64_t m = frontier; m; m &= m - 1) {
                next |= adj_[std::countr_zero(m)];
            }
            next &= d & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == d;
    }

    const Key& key_of(uint64_t d) {
        if constexpr (std::is_same_v<Key, uint64_t>) {
            mask_key_ = 0;
            for (uint64_t m = d; m; m &= m - 1) {
                mask_key_ |= 1ull << cols_[std::countr_zero(m)];
            }
            return mask_key_;
        } else {
            vec_key_.clear();
            for (uint64_t m = d; m; m &= m - 1) {
                vec_key_.push_back(cols_[std::countr_zero(m)]);
            }
            return vec_key_;
        }
    }

    struct Record {
        int32_t lam = kUnknown;
        int32_t mu = kUnknown;
    };

    Record& record(uint64_t d) {
        const Key& key = key_of(d);
        auto it = index_.find(key);
        if (it == index_.end()) {
            it = index_.emplace(key, static_cast<int32_t>(records_.size())).first;
            records_.push_back({});
        }
        return records_[it->second];
    }

    int32_t store(std::vector<S>& pool, const std::vector<S>& values) {
        bool any = false;
        for (const auto& v : values) {
            if (!is_zero(v)) {
                any = true;
                break;
            }
        }
        if (!any) {
            return kZero;
        }
        auto off = static_cast<int32_t>(pool.size());
        pool.insert(pool.end(), values.begin(), values.end());
        return off;
    }

    int32_t lam(uint64_t d) {
        const int size = std::popcount(d);
        if (size > p_.k_max) {
            return kZero;
        }
        if (p_.options.prune && !closed(d)) {
            return kZero;
        }
        if (int32_t known = record(d).lam; known != kUnknown) {
            return known;
        }
        std::vector<S> values(stride_, S(0));
        if (p_.modular) {
            modular_lambda(d, values);
        } else {
            integer_lambda(d, values);
        }
        int32_t off = store(lam_pool_, values);
        record(d).lam = off;
        return off;
    }

    void integer_lambda(uint64_t d, std::vector<S>& values) {
        int order[kMaxLocal + 1];
        int t = 0;
        for (uint64_t m = d; m; m &= m - 1) {
            order[t++] = std::countr_zero(m);
        }
        partial_sums_.assign(rows_.size(), 0);
        walk_integer(d, order, t, 0, 0, S(1), values);
    }

    void walk_integer(uint64_t d, const int* order, int t, int pos, int degree, const S& weight,
                      std::vector<S>& values) {
        if (pos == t) {
            values[degree] += weight;
            return;
        }
        const int q = order[pos];
        const int c = cols_[q];
        const int room = p_.k_max - degree - (t - pos - 1);
        const int top = std::min(p_.nu[c], room);
        const uint64_t after = d & ~((2ull << q) - 1);
        for (int v = 1; v <= top; ++v) {
            bool ok = true;
            for (auto [slot, a] : col_rows_[q]) {
                partial_sums_[slot] += a * v;
                if ((rows_[slot].mask & after) == 0 && partial_sums_[slot] != 0) {
                    ok = false;
                }
            }
            if (ok) {
                walk_integer(d, order, t, pos + 1, degree + v, weight * p_.powers[c][v], values);
            }
            for (auto [slot, a] : col_rows_[q]) {
                partial_sums_[slot] -= a * v;
            }
        }
    }

    void modular_lambda(uint64_t d, std::vector<S>& values) {
        int order[kMaxLocal + 1];
        int t = 0;
        for (uint64_t m = d; m; m &= m - 1) {
            order[t++] = std::countr_zero(m);
        }
        partial_sums_.assign(rows_.size(), 0);
        uint64_t count = walk_modular(d, order, t, 0);
        if (count == 0) {
            return;
        }
        S weight = S(static_cast<long>(count));
        for (int p = 0; p < t; ++p) {
            weight *= p_.powers[cols_[order[p]]][1];
        }
        values[t] = weight;
    }

    uint64_t walk_modular(uint64_t d, const int* order, int t, int pos) {
        if (pos == t) {
            return 1;
        }
        const int q = order[pos];
        const uint64_t after = d & ~((2ull << q) - 1);
        uint64_t count = 0;
        for (int v = 1; v < p_.kappa; ++v) {
            bool ok = true;
            for (auto [slot, a] : col_rows_[q]) {
                partial_sums_[slot] = (partial_sums_[slot] + a * v) % p_.kappa;
                if ((rows_[slot].mask & after) == 0 && partial_sums_[slot] != 0) {
                    ok = false;
                }
            }
            if (ok) {
                count += walk_modular(d, order, t, pos + 1);
            }
            for (auto [slot, a] : col_rows_[q]) {
                partial_sums_[slot] = ((partial_sums_[slot] - a * v) % p_.kappa + p_.kappa) % p_.kappa;
            }
        }
        return count;
    }

    int32_t mu(uint64_t d) {
        const int size = std::popcount(d);
        if (size > p_.k_max) {
            return kZero;
        }
        const bool conn = connected(d);
        if (!p_.options.include_disconnected && !conn) {
            return kZero;
        }
        if (p_.options.prune && !closed(d)) {
            return kZero;
        }
        if (int32_t known = record(d).mu; known != kUnknown) {
            return known;
        }

        const int K = p_.k_max;
        const int32_t lam_d = lam(d);

        // Nonzero lambda on submasks (including d) and nonzero mu on proper submasks.
        std::vector<std::pair<uint64_t, int32_t>> lam_list;
        std::vector<std::pair<uint64_t, int32_t>> mu_list;
        for (uint64_t e = d; e; e = (e - 1) & d) {
            int32_t lo = lam(e);
            if (lo >= 0) {
                lam_list.push_back({e, lo});
            }
            if (e != d) {
                int32_t mo = mu(e);
                if (mo >= 0) {
                    mu_list.push_back({e, mo});
                }
            }
        }

        // pi_j(d) is the sum of lambda_j over all submasks.
        std::vector<S> pi(stride_, S(0));
        for (auto [e, lo] : lam_list) {
            for (int j = std::popcount(e); j <= K; ++j) {
                pi[j] += lam_pool_[lo + j];
            }
        }

        std::vector<S> acc(stride_, S(0));
        for (auto [m2, mo] : mu_list) {
            const uint64_t need = d & ~m2;
            const int s2 = std::popcount(m2);
            for (auto [m1, lo] : lam_list) {
                if ((m1 & need) != need) {
                    continue;
                }
                const int s1 = std::popcount(m1);
                if (s1 + s2 > K) {
                    continue;
                }
                if (p_.options.verify_pairs) {
                    verify_pair(d, m1, m2);
                }
                for (int k = s1 + s2; k <= K; ++k) {
                    S sum(0);
                    for (int i = s2; i <= k - s1; ++i) {
                        sum += lam_pool_[lo + (k - i)] * mu_pool_[mo + i];
                    }
                    acc[k] += sum;
                }
            }
        }

        std::vector<S> values(stride_, S(0));
        for (int k = std::max(size, 1); k <= K; ++k) {
            S v = -acc[k];
            if (lam_d >= 0) {
                v -= S(static_cast<long>(k)) * lam_pool_[lam_d + k];
            }
            for (int i = size; i < k; ++i) {
                v -= pi[k - i] * values[i];
            }
            values[k] = v;
        }
        if (p_.options.verify_pairs) {
            for (auto [m1, lo] : lam_list) {
                verify_pair(d, m1, d);
            }
        }

        ++evaluated_;
        if (!conn) {
            for (const auto& v : values) {
                max_disconnected_ = std::max(max_disconnected_, magnitude(v));
            }
        }
        if (p_.options.collect_table) {
            MuEntry<S> entry;
            for (uint64_t m = d; m; m &= m - 1) {
                entry.cols.push_back(cols_[std::countr_zero(m)]);
            }
            entry.connected = conn;
            entry.mu = values;
            entry.lambda.assign(stride_, S(0));
            if (lam_d >= 0) {
                std::copy(lam_pool_.begin() + lam_d, lam_pool_.begin() + lam_d + stride_, entry.lambda.begin());
            }
            table_.push_back(std::move(entry));
        }
        int32_t off = store(mu_pool_, values);
        record(d).mu = off;
        return off;
    }

    std::vector<int> global_cols(uint64_t m) const {
        std::vector<int> out;
        for (; m; m &= m - 1) {
            out.push_back(cols_[std::countr_zero(m)]);
        }
        return out;
    }

    void verify_pair(uint64_t d, uint64_t m1, uint64_t m2) {
        SubMatrix b = induced_submatrix(p_.a, global_cols(d));
        auto c1 = global_cols(m1);
        auto c2 = global_cols(m2);
        SubMatrix b1 = restrict_columns(b, c1);
        SubMatrix b2 = restrict_columns(b, c2);
        if (!(b1 == induced_submatrix(p_.a, c1)) || !(b2 == induced_submatrix(p_.a, c2)) || !compatible(b1, b2) ||
            !(connected_sum(b1, b2) == b)) {
            fail(ErrorKind::IncompatibleInputs, "column cover does not reassemble its submatrix");
        }
        ++pairs_verified_;
    }

    const Parent<S>& p_;
    size_t stride_;
    std::vector<S>* partial_ = nullptr;
    std::unique_ptr<ConnectedSetWalker<Worker>> walker_;

    // Incremental row balance of the set held by the walker.
    std::vector<int> row_slot_;
    std::vector<int> row_c0_;
    std::vector<int> row_c1_;
    int unbalanced_ = 0;

    // Local view of the current top-level set.
    int t_ = 0;
    int cols_[64] = {};
    uint64_t adj_[64] = {};
    std::vector<std::pair<int, long>> col_rows_[64];
    std::vector<LocalRow> rows_;
    std::vector<int> row_ids_;
    std::vector<long> partial_sums_;

    // Memo keyed by parent column sets.
    typename KeyMap<Key>::type index_;
    std::vector<Record> records_;
    std::vector<S> lam_pool_;
    std::vector<S> mu_pool_;
    uint64_t mask_key_ = 0;
    std::vector<int> vec_key_;

    uint64_t enumerated_ = 0;
    std::vector<uint64_t> by_size_;
    uint64_t evaluated_ = 0;
    uint64_t pairs_verified_ = 0;
    double max_disconnected_ = 0.0;
    std::vector<MuEntry<S>> table_;
};

template <class S, class Key>
FastResult<S> run_workers(const Parent<S>& p) {
    const int n = p.a.cols();
    const int threads = std::max(1, std::min(p.options.threads, std::max(n, 1)));
    std::vector<std::vector<S>> partials(n, std::vector<S>(static_cast<size_t>(p.k_max) + 1, S(0)));
    std::vector<std::unique_ptr<Worker<S, Key>>> workers;
    for (int t = 0; t < threads; ++t) {
        workers.push_back(std::make_unique<Worker<S, Key>>(p));
    }
    std::atomic<int> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto body = [&](Worker<S, Key>& worker) {
        try {
            for (int anchor = next++; anchor < n; anchor = next++) {
                worker.run_anchor(anchor, partials[anchor]);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next = n;
        }
    };
    if (threads == 1) {
        body(*workers[0]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(body, std::ref(*workers[t]));
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    FastResult<S> out;
    out.sigma.assign(static_cast<size_t>(p.k_max) + 1, S(0));
    for (int anchor = 0; anchor < n; ++anchor) {
        for (int k = 1; k <= p.k_max; ++k) {
            out.sigma[k] += partials[anchor][k];
        }
    }
    out.subsets_by_size.assign(static_cast<size_t>(p.max_set) + 1, 0);
    std::map<std::vector<int>, MuEntry<S>> merged;
    for (auto& w : workers) {
        out.subsets_enumerated += w->enumerated();
        for (size_t s = 0; s < w->by_size().size(); ++s) {
            out.subsets_by_size[s] += w->by_size()[s];
        }
        out.sets_evaluated += w->evaluated();
        out.pairs_verified += w->pairs_verified();
        out.max_disconnected_mu = std::max(out.max_disconnected_mu, w->max_disconnected());
        for (auto& e : w->table()) {
            auto cols = e.cols;
            merged.emplace(std::move(cols), std::move(e));
        }
    }
    for (auto& [cols, e] : merged) {
        out.table.push_back(std::move(e));
    }
    return out;
}

template <class S>
FastResult<S> run(const SparseMatrix& a, bool modular, int kappa, const std::vector<int>& nu, const std::vector<S>& w,
                  int k_max, const FastOptions& options) {
    if (k_max < 0) {
        fail(ErrorKind::InvalidInput, "power-sum order must be non-negative");
    }
    if (options.threads < 1) {
        fail(ErrorKind::InvalidInput, "thread count must be at least 1");
    }
    Parent<S> p(a);
    p.modular = modular;
    p.kappa = kappa;
    p.nu = nu;
    p.k_max = k_max;
    p.options = options;
    if (options.include_disconnected) {
        p.options.prune = false;
    }
    p.max_set = std::min(k_max, a.cols());
    if (p.max_set > kMaxLocal) {
        fail(ErrorKind::InvalidInput, "sets of more than " + std::to_string(kMaxLocal) +
                                          " columns are not supported; lower the power-sum order");
    }
    p.graph = column_graph(a);
    p.powers.resize(a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        int top = modular ? 1 : std::min(nu[j], std::max(k_max, 1));
        p.powers[j].push_back(S(1));
        for (int t = 1; t <= top; ++t) {
            p.powers[j].push_back(p.powers[j].back() * w[j]);
        }
    }
    if (k_max == 0 || a.cols() == 0) {
        FastResult<S> out;
        out.sigma.assign(static_cast<size_t>(k_max) + 1, S(0));
        out.subsets_by_size.assign(static_cast<size_t>(p.max_set) + 1, 0);
        return out;
    }
    if (a.cols() <= 64) {
        return run_workers<S, uint64_t>(p);
    }
    return run_workers<S, std::vector<int>>(p);
}

}  // namespace

template <class S>
FastResult<S> sigma_fast(const WeightedInstance& inst, const std::vector<S>& w, int k_max, const FastOptions& options) {
    if (w.size() != static_cast<size_t>(inst.cols())) {
        fail(ErrorKind::InvalidInput, "weights must have one entry per column");
    }
    return run<S>(inst.a, false, 0, inst.nu, w, k_max, options);
}

FastResult<Complex> sigma_fast(const WeightedInstance& inst, int k_max, const FastOptions& options) {
    return sigma_fast<Complex>(inst, inst.w, k_max, options);
}

template <class S>
FastResult<S> code_sigma_fast(const ModularInstance& inst, const std::vector<S>& w, int k_max,
                              const FastOptions& options) {
    if (w.size() != static_cast<size_t>(inst.cols())) {
        fail(ErrorKind::InvalidInput, "weights must have one entry per column");
    }
    std::vector<int> nu(inst.cols(), inst.kappa - 1);
    return run<S>(inst.a, true, inst.kappa, nu, w, k_max, options);
}

FastResult<Complex> code_sigma_fast(const ModularInstance& inst, int k_max, const FastOptions& options) {
    return code_sigma_fast<Complex>(inst, inst.w, k_max, options);
}

template <class S>
std::vector<MuEntry<S>> mu_table(const WeightedInstance& inst, const std::vector<S>& w, int k,
                                 bool include_disconnected) {
    FastOptions options;
    options.prune = false;
    options.include_disconnected = include_disconnected;
    options.collect_table = true;
    return sigma_fast<S>(inst, w, k, options).table;
}

int default_thread_count() {
    if (const char* env = std::getenv("WCOUNT_THREADS")) {
        int value = std::atoi(env);
        if (value >= 1) {
            return value;
        }
    }
    return 1;
}

template FastResult<Complex> sigma_fast(const WeightedInstance&, const std::vector<Complex>&, int, const FastOptions&);
template FastResult<GaussianRational> sigma_fast(const WeightedInstance&, const std::vector<GaussianRational>&, int,
                                                 const FastOptions&);
template FastResult<Complex> code_sigma_fast(const ModularInstance&, const std::vector<Complex>&, int,
                                             const FastOptions&);
template FastResult<GaussianRational> code_sigma_fast(const ModularInstance&, const std::vector<GaussianRational>&, int,
                                                      const FastOptions&);
template std::vector<MuEntry<Complex>> mu_table(const WeightedInstance&, const std::vector<Complex>&, int, bool);
template std::vector<MuEntry<GaussianRational>> mu_table(const WeightedInstance&, const std::vector<GaussianRational>&,
                                                         int, bool);

}  // namespace wcount
