#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "multirank/matrix.hpp"
#include "multirank/partition.hpp"
#include "multirank/state.hpp"

namespace multirank {

using MatrixPosition = std::pair<std::uint64_t, std::uint64_t>;

// Sparse exact matrix with possibly parametric entries. Zero entries are never stored.
class SparseMatrix {
public:
    SparseMatrix(std::uint64_t rows, std::uint64_t cols) : rows_(rows), cols_(cols) {}
    static SparseMatrix from_dense(const DenseMatrix& dense);

    std::uint64_t rows() const noexcept { return rows_; }
    std::uint64_t cols() const noexcept { return cols_; }
    const std::map<MatrixPosition, Amplitude>& entries() const noexcept { return entries_; }

    // Adds to the entry at (row, col); throws DomainError when out of bounds.
    void add(std::uint64_t row, std::uint64_t col, const Amplitude& value);

    bool is_parametric() const;
    SparseMatrix transpose() const;
    // Requires Gaussian entries; throws PolicyError otherwise.
    DenseMatrix to_dense() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::uint64_t rows_;
    std::uint64_t cols_;
    std::map<MatrixPosition, Amplitude> entries_;
};

// Matricization of a state for one bipartition: rows indexed by the parties
// of I, columns by the complement.
struct FlattenedMatrix {
    Bipartition bipartition;
    SparseMatrix matrix;
};

// Row and column of a multi-index: big-endian mixed-radix values of the
// sub-tuples over I and over the complement (first listed party most significant).
MatrixPosition row_col_of(const MultiIndex& index, const Bipartition& bipartition, const QuditDims& dims);

// Built directly from the nonzero terms; the dense tensor is never formed.
// Throws DomainError if the bipartition does not belong to the state's dims.
FlattenedMatrix flatten(const StateTensor& state, const Bipartition& bipartition);

// Dense rendering of every entry as an exact string, for debugging dumps.
std::vector<std::vector<std::string>> dense_rows(const SparseMatrix& matrix);

}  // namespace multirank
