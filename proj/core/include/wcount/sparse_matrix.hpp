#ifndef WCOUNT_SPARSE_MATRIX_HPP
#define WCOUNT_SPARSE_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

// Integer sparse matrix with simultaneous row-major and column-major indexes.

namespace wcount {

/// A nonzero entry as seen from a row (`index` is a column) or from a column (`index` is a row).
struct SparseEntry {
    int index;
    long value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Coordinate-format input for building a `SparseMatrix`; indices are 0-based.
struct Triplet {
    int row;
    int col;
    long value;
};

/**
 * Sparse integer matrix indexed both by rows and by columns.
 *
 * Both indexes are compressed and sorted, so the nonzero rows of a column are
 * available in time proportional to that column's nonzero count. Stored
 * values are never zero and each `(i, j)` appears at most once.
 */
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Zero values, out-of-range indices and duplicate coordinates throw `Error(InvalidInput)`.
    SparseMatrix(int rows, int cols, std::vector<Triplet> triplets);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t nonzeros() const { return row_entries_.size(); }

    std::span<const SparseEntry> row(int i) const {
        return {row_entries_.data() + row_ptr_[i], row_entries_.data() + row_ptr_[i + 1]};
    }
    std::span<const SparseEntry> col(int j) const {
        return {col_entries_.data() + col_ptr_[j], col_entries_.data() + col_ptr_[j + 1]};
    }

    /// Entry value, zero when absent. Binary search over the column.
    long at(int i, int j) const;

    std::vector<Triplet> triplets() const;

    /// Matrix keeping only the listed rows and columns, renumbered in the given order.
    SparseMatrix submatrix(std::span<const int> row_ids, std::span<const int> col_ids) const;

    /// Block-diagonal direct sum: `lhs` occupies the leading rows and columns.
    static SparseMatrix direct_sum(const SparseMatrix& lhs, const SparseMatrix& rhs);

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ptr_ == b.row_ptr_ &&
               a.row_entries_ == b.row_entries_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<size_t> row_ptr_{0};
    std::vector<SparseEntry> row_entries_;
    std::vector<size_t> col_ptr_{0};
    std::vector<SparseEntry> col_entries_;
};

}  // namespace wcount

#endif
