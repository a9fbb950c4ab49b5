#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "multirank/state.hpp"

namespace multirank {

// Split of the parties {1..n} into a row side I and a column side, each
// strictly increasing. Party labels are 1-based.
class Bipartition {
public:
    // Throws DomainError unless `parties` is a strictly increasing, nonempty,
    // proper subset of {1..n}. Any size 1..n-1 is accepted so that the
    // swapped (complement-as-rows) view can be represented; the canonical
    // enumeration only produces |I| <= n/2.
    Bipartition(const QuditDims& dims, std::vector<std::size_t> parties);

    const std::vector<std::size_t>& parties() const noexcept { return parties_; }
    const std::vector<std::size_t>& complement() const noexcept { return complement_; }
    std::size_t ell() const noexcept { return parties_.size(); }
    std::uint64_t row_dim() const noexcept { return row_dim_; }
    std::uint64_t col_dim() const noexcept { return col_dim_; }

    // Same cut with the sides exchanged.
    Bipartition swapped() const { return Bipartition(dims_, complement_); }

    const QuditDims& dims() const noexcept { return dims_; }

    // "I=[1,3]"
    std::string label() const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    QuditDims dims_;
    std::vector<std::size_t> parties_;
    std::vector<std::size_t> complement_;
    std::uint64_t row_dim_ = 1;
    std::uint64_t col_dim_ = 1;
};

// The C(n, ell) bipartitions with |I| = ell, lexicographic in I.
// Throws DomainError unless 1 <= ell <= floor(n/2).
std::vector<Bipartition> enumerate_bipartitions(const QuditDims& dims, std::size_t ell);

// enumerate_bipartitions for ell = 1..floor(n/2), one list per level.
std::vector<std::vector<Bipartition>> all_levels(const QuditDims& dims);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace multirank
