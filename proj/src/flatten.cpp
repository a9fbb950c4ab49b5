#include "multirank/flatten.hpp"

#include <algorithm>

#include "multirank/error.hpp"

namespace multirank {

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& dense) {
    SparseMatrix m(dense.rows(), dense.cols());
    for (std::size_t r = 0; r < dense.rows(); ++r)
        for (std::size_t c = 0; c < dense.cols(); ++c)
            if (!dense(r, c).is_zero()) m.entries_.emplace(MatrixPosition{r, c}, dense(r, c));
    return m;
}

void SparseMatrix::add(std::uint64_t row, std::uint64_t col, const Amplitude& value) {
    if (row >= rows_ || col >= cols_) {
        throw DomainError("matrix entry (" + std::to_string(row) + ", " + std::to_string(col) + ") out of bounds");
    }
    auto [it, inserted] = entries_.try_emplace(MatrixPosition{row, col}, value);
    if (!inserted) it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
}

bool SparseMatrix::is_parametric() const {
    return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return !e.second.is_gaussian(); });
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [pos, value] : entries_) t.entries_.emplace(MatrixPosition{pos.second, pos.first}, value);
    return t;
}

DenseMatrix SparseMatrix::to_dense() const {
    if (is_parametric()) throw PolicyError("matrix has parametric entries");
    DenseMatrix d(rows_, cols_);
    for (const auto& [pos, value] : entries_) d(pos.first, pos.second) = value.constant();
    return d;
}

MatrixPosition row_col_of(const MultiIndex& index, const Bipartition& bipartition, const QuditDims& dims) {
    std::uint64_t row = 0;
    for (std::size_t j : bipartition.parties()) row = row * dims[j - 1] + index[j - 1];
    std::uint64_t col = 0;
    for (std::size_t j : bipartition.complement()) col = col * dims[j - 1] + index[j - 1];
    return {row, col};
}

FlattenedMatrix flatten(const StateTensor& state, const Bipartition& bipartition) {
    const QuditDims& dims = state.dims();
    if (bipartition.dims() != dims) {
        throw DomainError("bipartition " + bipartition.label() + " does not match the state's dimensions");
    }
    SparseMatrix m(bipartition.row_dim(), bipartition.col_dim());
    for (const auto& [index, amp] : state.terms()) {
        const auto [row, col] = row_col_of(index, bipartition, dims);
        m.add(row, col, amp);
    }
    return {bipartition, std::move(m)};
}

std::vector<std::vector<std::string>> dense_rows(const SparseMatrix& matrix) {
    std::vector<std::vector<std::string>> rows(matrix.rows(), std::vector<std::string>(matrix.cols(), "0"));
    for (const auto& [pos, value] : matrix.entries()) rows[pos.first][pos.second] = value.to_string();
    return rows;
}

}  // namespace multirank
