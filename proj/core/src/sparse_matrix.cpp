#include "wcount/sparse_matrix.hpp"

#include <algorithm>
#include <string>

#include "wcount/error.hpp"

namespace wcount {

SparseMatrix::SparseMatrix(int rows, int cols, std::vector<Triplet> triplets) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        fail(ErrorKind::InvalidInput, "matrix dimensions must be non-negative");
    }
    for (const auto& t : triplets) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
            fail(ErrorKind::InvalidInput, "entry (" + std::to_string(t.row + 1) + ", " + std::to_string(t.col + 1) +
                                              ") is outside a " + std::to_string(rows) + "x" + std::to_string(cols) +
                                              " matrix");
        }
        if (t.value == 0) {
            fail(ErrorKind::InvalidInput, "entry (" + std::to_string(t.row + 1) + ", " + std::to_string(t.col + 1) +
                                              ") has a zero coefficient");
        }
    }

    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (size_t e = 1; e < triplets.size(); ++e) {
        if (triplets[e].row == triplets[e - 1].row && triplets[e].col == triplets[e - 1].col) {
            fail(ErrorKind::InvalidInput, "duplicate entry (" + std::to_string(triplets[e].row + 1) + ", " +
                                              std::to_string(triplets[e].col + 1) + ")");
        }
    }

    row_ptr_.assign(static_cast<size_t>(rows) + 1, 0);
    col_ptr_.assign(static_cast<size_t>(cols) + 1, 0);
    for (const auto& t : triplets) {
        ++row_ptr_[t.row + 1];
        ++col_ptr_[t.col + 1];
    }
    for (int i = 0; i < rows; ++i) {
        row_ptr_[i + 1] += row_ptr_[i];
    }
    for (int j = 0; j < cols; ++j) {
        col_ptr_[j + 1] += col_ptr_[j];
    }

    row_entries_.resize(triplets.size());
    col_entries_.resize(triplets.size());
    std::vector<size_t> row_fill(row_ptr_.begin(), row_ptr_.end() - 1);
    std::vector<size_t> col_fill(col_ptr_.begin(), col_ptr_.end() - 1);
    // Triplets are sorted by (row, col), so both fills come out sorted.
    for (const auto& t : triplets) {
        row_entries_[row_fill[t.row]++] = {t.col, t.value};
        col_entries_[col_fill[t.col]++] = {t.row, t.value};
    }
}

long SparseMatrix::at(int i, int j) const {
    auto entries = col(j);
    auto it = std::lower_bound(entries.begin(), entries.end(), i,
                               [](const SparseEntry& e, int row) { return e.index < row; });
    return (it != entries.end() && it->index == i) ? it->value : 0;
}

std::vector<Triplet> SparseMatrix::triplets() const {
    std::vector<Triplet> out;
    out.reserve(nonzeros());
    for (int i = 0; i < rows_; ++i) {
        for (const auto& e : row(i)) {
            out.push_back({i, e.index, e.value});
        }
    }
    return out;
}

SparseMatrix SparseMatrix::submatrix(std::span<const int> row_ids, std::span<const int> col_ids) const {
    std::vector<int> row_map(rows_, -1);
    for (size_t r = 0; r < row_ids.size(); ++r) {
        row_map[row_ids[r]] = static_cast<int>(r);
    }
    std::vector<Triplet> out;
    for (size_t c = 0; c < col_ids.size(); ++c) {
        for (const auto& e : col(col_ids[c])) {
            if (row_map[e.index] >= 0) {
                out.push_back({row_map[e.index], static_cast<int>(c), e.value});
            }
        }
    }
    return SparseMatrix(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()), std::move(out));
}

SparseMatrix SparseMatrix::direct_sum(const SparseMatrix& lhs, const SparseMatrix& rhs) {
    auto entries = lhs.triplets();
    for (auto t : rhs.triplets()) {
        t.row += lhs.rows();
        t.col += lhs.cols();
        entries.push_back(t);
    }
    return SparseMatrix(lhs.rows() + rhs.rows(), lhs.cols() + rhs.cols(), std::move(entries));
}

}  // namespace wcount
