#pragma once

// Exact sparse linear algebra over CycloScalar: incremental reduced row
// echelon form, rank and kernel bases.

#include "hopfk/scalars.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace hopfk {

using SparseVec = std::map<std::size_t, CycloScalar>;

class RowEchelon {
public:
    /// Reduces v against the current rows; returns true when v was independent
    /// (and is now part of the basis).
    bool insert(SparseVec v);
    /// Reduction of v modulo the row space; empty iff v lies in the span.
    SparseVec reduce(SparseVec v) const;

    std::size_t rank() const { return rows_.size(); }
    /// Rows in reduced form, each with leading coefficient 1 at pivot_columns()[k].
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

private:
    std::vector<SparseVec> rows_;
    std::vector<std::size_t> pivots_;
    std::map<std::size_t, std::size_t> pivot_row_;  // column -> row index
};

std::size_t rank(const std::vector<SparseVec>& rows);

/// Basis of { v : row . v = 0 for every row }, vectors of length ncols.
std::vector<SparseVec> kernel_basis(std::size_t ncols, const std::vector<SparseVec>& rows);

/// Transposes keyed column vectors into equation rows.
template <class Key>
std::vector<SparseVec> rows_from_columns(const std::vector<std::map<Key, CycloScalar>>& columns) {
    std::map<Key, SparseVec> rows;
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [k, v] : columns[c])
            if (!v.is_zero()) rows[k].emplace(c, v);
    std::vector<SparseVec> out;
    out.reserve(rows.size());
    for (auto& [k, r] : rows) out.push_back(std::move(r));
    return out;
}

/// Dense helpers for the small matrices of conjugation actions.
using DenseMatrix = std::vector<std::vector<CycloScalar>>;
std::size_t dense_rank(const DenseMatrix& a);
DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dense_shift(DenseMatrix a, const CycloScalar& lambda);  // a - lambda I
std::vector<std::vector<CycloScalar>> dense_kernel(const DenseMatrix& a);

}  // namespace hopfk
