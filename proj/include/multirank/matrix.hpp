#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "multirank/gaussian.hpp"

namespace multirank {

// Small dense exact matrix, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    DenseMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    DenseMatrix transpose() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

}  // namespace multirank
