#include "wcount/submatrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wcount/error.hpp"

namespace wcount {

namespace {

bool sorted_contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

bool triplet_less(const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; }

}  // namespace

SubMatrix::SubMatrix(std::vector<Triplet> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), triplet_less);
    for (size_t e = 0; e < entries_.size(); ++e) {
        if (entries_[e].value == 0) {
            fail(ErrorKind::InvalidInput, "submatrix entries must be nonzero");
        }
        if (e > 0 && !triplet_less(entries_[e - 1], entries_[e])) {
            fail(ErrorKind::InvalidInput, "duplicate submatrix entry");
        }
        rows_.push_back(entries_[e].row);
        cols_.push_back(entries_[e].col);
    }
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
    std::sort(cols_.begin(), cols_.end());
    cols_.erase(std::unique(cols_.begin(), cols_.end()), cols_.end());
}

long SubMatrix::at(int row, int col) const {
    Triplet key{row, col, 0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key, triplet_less);
    return (it != entries_.end() && it->row == row && it->col == col) ? it->value : 0;
}

bool SubMatrix::has_row(int row) const { return sorted_contains(rows_, row); }
bool SubMatrix::has_col(int col) const { return sorted_contains(cols_, col); }

bool SubMatrix::connected() const {
    if (cols_.empty()) {
        return false;
    }
    // Union-find over columns joined through shared rows.
    std::vector<int> parent(cols_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto col_index = [&](int c) {
        return static_cast<int>(std::lower_bound(cols_.begin(), cols_.end(), c) - cols_.begin());
    };
    for (size_t e = 1; e < entries_.size(); ++e) {
        if (entries_[e].row == entries_[e - 1].row) {
            parent[find(col_index(entries_[e].col))] = find(col_index(entries_[e - 1].col));
        }
    }
    int root = find(0);
    for (size_t c = 1; c < cols_.size(); ++c) {
        if (find(static_cast<int>(c)) != root) {
            return false;
        }
    }
    return true;
}

bool operator==(const SubMatrix& a, const SubMatrix& b) {
    if (a.entries_.size() != b.entries_.size() || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        return false;
    }
    for (size_t e = 0; e < a.entries_.size(); ++e) {
        const auto& x = a.entries_[e];
        const auto& y = b.entries_[e];
        if (x.row != y.row || x.col != y.col || x.value != y.value) {
            return false;
        }
    }
    return true;
}

SubMatrix induced_submatrix(const SparseMatrix& a, std::span<const int> cols) {
    std::vector<Triplet> entries;
    for (int c : cols) {
        if (c < 0 || c >= a.cols()) {
            fail(ErrorKind::InvalidInput, "column index out of range");
        }
        for (const auto& e : a.col(c)) {
            entries.push_back({e.index, c, e.value});
        }
    }
    return SubMatrix(std::move(entries));
}

SubMatrix restrict_columns(const SubMatrix& b, std::span<const int> cols) {
    std::vector<int> keep(cols.begin(), cols.end());
    std::sort(keep.begin(), keep.end());
    std::vector<Triplet> entries;
    for (const auto& t : b.entries()) {
        if (sorted_contains(keep, t.col)) {
            entries.push_back(t);
        }
    }
    return SubMatrix(std::move(entries));
}

bool compatible(const SubMatrix& b1, const SubMatrix& b2) {
    std::vector<int> shared_cols;
    std::set_intersection(b1.cols().begin(), b1.cols().end(), b2.cols().begin(), b2.cols().end(),
                          std::back_inserter(shared_cols));
    for (int c : shared_cols) {
        for (int r : b1.rows()) {
            if (b2.has_row(r)) {
                if (b1.at(r, c) != b2.at(r, c)) {
                    return false;
                }
            } else if (b1.at(r, c) != 0) {
                return false;
            }
        }
        for (int r : b2.rows()) {
            if (!b1.has_row(r) && b2.at(r, c) != 0) {
                return false;
            }
        }
    }
    return true;
}

SubMatrix connected_sum(const SubMatrix& b1, const SubMatrix& b2) {
    if (!compatible(b1, b2)) {
        fail(ErrorKind::IncompatibleInputs, "submatrices disagree on their shared columns");
    }
    std::vector<Triplet> entries = b1.entries();
    for (const auto& t : b2.entries()) {
        if (b1.at(t.row, t.col) == 0) {
            entries.push_back(t);
        }
    }
    return SubMatrix(std::move(entries));
}

template <class S>
std::vector<S> lambda_values(const SubMatrix& b, const std::vector<S>& w, const std::vector<int>& nu, int k_max) {
    std::vector<S> lambda(static_cast<size_t>(std::max(k_max, 0)) + 1, S(0));
    const auto& cols = b.cols();
    const int t = static_cast<int>(cols.size());
    if (t == 0 || t > k_max) {
        return lambda;
    }
    // Per column: (row slot, coefficient); per row slot: last column position touching it.
    const auto& rows = b.rows();
    std::vector<std::vector<std::pair<int, long>>> col_rows(t);
    std::vector<int> last(rows.size(), -1);
    for (const auto& e : b.entries()) {
        int ci = static_cast<int>(std::lower_bound(cols.begin(), cols.end(), e.col) - cols.begin());
        int ri = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), e.row) - rows.begin());
        col_rows[ci].push_back({ri, e.value});
        last[ri] = std::max(last[ri], ci);
    }
    std::vector<long> partial(rows.size(), 0);
    std::function<void(int, int, S)> walk = [&](int pos, int degree, S weight) {
        if (pos == t) {
            lambda[degree] += weight;
            return;
        }
        const int c = cols[pos];
        const int remaining = t - pos - 1;
        S power = weight;
        for (int v = 1; v <= nu[c] && degree + v + remaining <= k_max; ++v) {
            power *= w[c];
            bool ok = true;
            for (auto [ri, a] : col_rows[pos]) {
                partial[ri] += a * v;
                if (last[ri] == pos && partial[ri] != 0) {
                    ok = false;
                }
            }
            if (ok) {
                walk(pos + 1, degree + v, power);
            }
            for (auto [ri, a] : col_rows[pos]) {
                partial[ri] -= a * v;
            }
        }
    };
    walk(0, 0, S(1));
    return lambda;
}

template std::vector<Complex> lambda_values(const SubMatrix&, const std::vector<Complex>&, const std::vector<int>&, int);
template std::vector<GaussianRational> lambda_values(const SubMatrix&, const std::vector<GaussianRational>&,
                                                     const std::vector<int>&, int);

}  // namespace wcount
