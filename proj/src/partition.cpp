#include "multirank/partition.hpp"

#include "multirank/error.hpp"

namespace multirank {

Bipartition::Bipartition(const QuditDims& dims, std::vector<std::size_t> parties) : dims_(dims), parties_(std::move(parties)) {
    const std::size_t n = dims.parties();
    if (parties_.empty() || parties_.size() >= n) {
        throw DomainError("bipartition needs 1.." + std::to_string(n - 1) + " parties on the row side, got " +
                          std::to_string(parties_.size()));
    }
    std::size_t prev = 0;
    for (std::size_t j : parties_) {
        if (j <= prev || j > n) throw DomainError("bipartition parties must be strictly increasing within 1..n");
        prev = j;
    }
    std::size_t k = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        if (k < parties_.size() && parties_[k] == j) {
            row_dim_ *= dims[j - 1];
            ++k;
        } else {
            complement_.push_back(j);
            col_dim_ *= dims[j - 1];
        }
    }
}

std::string Bipartition::label() const {
    std::string s = "I=[";
    for (std::size_t k = 0; k < parties_.size(); ++k) {
        if (k > 0) s += ",";
        s += std::to_string(parties_[k]);
    }
    return s + "]";
}

std::vector<Bipartition> enumerate_bipartitions(const QuditDims& dims, std::size_t ell) {
    const std::size_t n = dims.parties();
    if (ell < 1 || ell > n / 2) {
        throw DomainError("level " + std::to_string(ell) + " out of range 1.." + std::to_string(n / 2));
    }
    std::vector<Bipartition> out;
    out.reserve(binomial(n, ell));
    // Lexicographic walk over increasing ell-tuples of {1..n}.
    std::vector<std::size_t> subset(ell);
    for (std::size_t k = 0; k < ell; ++k) subset[k] = k + 1;
    while (true) {
        out.emplace_back(dims, subset);
        std::size_t k = ell;
        while (k > 0 && subset[k - 1] == n - ell + k) --k;
        if (k == 0) break;
        ++subset[k - 1];
        for (std::size_t m = k; m < ell; ++m) subset[m] = subset[m - 1] + 1;
    }
    return out;
}

std::vector<std::vector<Bipartition>> all_levels(const QuditDims& dims) {
    std::vector<std::vector<Bipartition>> levels;
    for (std::size_t ell = 1; ell <= dims.parties() / 2; ++ell) levels.push_back(enumerate_bipartitions(dims, ell));
    return levels;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace multirank
