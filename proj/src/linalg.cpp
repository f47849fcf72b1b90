#include "hopfk/linalg.hpp"

#include <algorithm>

namespace hopfk {

namespace {

// v -= c * row
void axpy(SparseVec& v, const CycloScalar& c, const SparseVec& row) {
    for (const auto& [col, x] : row) {
        auto [it, inserted] = v.try_emplace(col, -(c * x));
        if (!inserted) {
            it->second -= c * x;
            if (it->second.is_zero()) v.erase(it);
        }
    }
}

}  // namespace

SparseVec RowEchelon::reduce(SparseVec v) const {
    // Rows are fully reduced, so one pass over pivots present in v suffices.
    for (auto it = v.begin(); it != v.end();) {
        auto p = pivot_row_.find(it->first);
        if (p == pivot_row_.end() || it->second.is_zero()) {
            if (it->second.is_zero()) it = v.erase(it);
            else ++it;
            continue;
        }
        const std::size_t col = it->first;
        const CycloScalar c = it->second;
        axpy(v, c, rows_[p->second]);
        it = v.upper_bound(col);
    }
    return v;
}

bool RowEchelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const std::size_t col = v.begin()->first;
    const CycloScalar inv = v.begin()->second.inv();
    for (auto& [c, x] : v) x *= inv;
    for (auto& row : rows_) {
        auto it = row.find(col);
        if (it == row.end()) continue;
        const CycloScalar c = it->second;
        axpy(row, c, v);
    }
    pivot_row_[col] = rows_.size();
    pivots_.push_back(col);
    rows_.push_back(std::move(v));
    return true;
}

std::size_t rank(const std::vector<SparseVec>& rows) {
    RowEchelon e;
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

std::vector<SparseVec> kernel_basis(std::size_t ncols, const std::vector<SparseVec>& rows) {
    RowEchelon e;
    for (const auto& r : rows) e.insert(r);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : e.pivot_columns()) is_pivot.at(c) = true;
    std::vector<SparseVec> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        v.emplace(f, CycloScalar(1));
        for (std::size_t k = 0; k < e.rank(); ++k) {
            const auto& row = e.rows()[k];
            auto it = row.find(f);
            if (it != row.end()) v.emplace(e.pivot_columns()[k], -it->second);
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {
std::vector<SparseVec> to_sparse(const DenseMatrix& a) {
    std::vector<SparseVec> rows;
    for (const auto& r : a) {
        SparseVec v;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (!r[j].is_zero()) v.emplace(j, r[j]);
        rows.push_back(std::move(v));
    }
    return rows;
}
}  // namespace

std::size_t dense_rank(const DenseMatrix& a) { return rank(to_sparse(a)); }

DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    DenseMatrix out(n, std::vector<CycloScalar>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

DenseMatrix dense_shift(DenseMatrix a, const CycloScalar& lambda) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= lambda;
    return a;
}

std::vector<std::vector<CycloScalar>> dense_kernel(const DenseMatrix& a) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    std::vector<std::vector<CycloScalar>> out;
    for (const auto& v : kernel_basis(n, to_sparse(a))) {
        std::vector<CycloScalar> d(n);
        for (const auto& [j, x] : v) d[j] = x;
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace hopfk
