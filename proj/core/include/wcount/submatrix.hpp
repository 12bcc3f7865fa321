#ifndef WCOUNT_SUBMATRIX_HPP
#define WCOUNT_SUBMATRIX_HPP

#include <span>
#include <vector>

#include "wcount/scalar.hpp"
#include "wcount/sparse_matrix.hpp"

// Row-set by column-set pieces of a parent matrix, and their composition.
//
// Row and column ids refer to the parent matrix. Row and column sets are
// exactly the rows and columns carrying an entry, so a `SubMatrix` never has
// a zero row or column.

namespace wcount {

class SubMatrix {
public:
    SubMatrix() = default;
    /// Rows and columns are taken from the entries; zero values are rejected.
    explicit SubMatrix(std::vector<Triplet> entries);

    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }
    /// Entries sorted by (row, col).
    const std::vector<Triplet>& entries() const { return entries_; }
    long at(int row, int col) const;
    bool has_row(int row) const;
    bool has_col(int col) const;

    /// No split into two blocks with disjoint rows and disjoint columns.
    bool connected() const;

    friend bool operator==(const SubMatrix& a, const SubMatrix& b);

private:
    std::vector<int> rows_;
    std::vector<int> cols_;
    std::vector<Triplet> entries_;
};

/// Restriction of `a` to `cols` and all rows nonzero on them.
SubMatrix induced_submatrix(const SparseMatrix& a, std::span<const int> cols);

/// Restriction of `b` to `cols` (a subset of its columns) and the rows of `b` nonzero there.
SubMatrix restrict_columns(const SubMatrix& b, std::span<const int> cols);

/// Entries agree on the common block, and each side vanishes where its rows meet the shared columns alone.
bool compatible(const SubMatrix& b1, const SubMatrix& b2);

/// Union of the two blocks; throws `Error(IncompatibleInputs)` when not compatible.
SubMatrix connected_sum(const SubMatrix& b1, const SubMatrix& b2);

/**
 * Local sums: `lambda[j]` adds `prod w_c^{x_c}` over vectors with support
 * exactly the columns of `b`, `x_c <= nu_c`, `sum x = j` and `Bx = 0`.
 * Weights and caps are indexed by parent column. Returns `lambda[0..k_max]`.
 */
template <class S>
std::vector<S> lambda_values(const SubMatrix& b, const std::vector<S>& w, const std::vector<int>& nu, int k_max);

}  // namespace wcount

#endif
