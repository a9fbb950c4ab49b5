#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multirank/gaussian.hpp"
#include "multirank/matrix.hpp"

namespace multirank {

// Local dimensions d_1..d_n of an n-partite system, with their product.
class QuditDims {
public:
    // Throws DomainError unless n >= 2, every d_j >= 2 and the product fits in 63 bits.
    explicit QuditDims(std::vector<std::uint32_t> dims);

    std::size_t parties() const noexcept { return dims_.size(); }
    std::uint32_t operator[](std::size_t j) const { return dims_[j]; }
    const std::vector<std::uint32_t>& values() const noexcept { return dims_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint32_t max_dim() const noexcept;

    friend bool operator==(const QuditDims&, const QuditDims&) = default;

private:
    std::vector<std::uint32_t> dims_;
    std::uint64_t total_ = 1;
};

// Position of one amplitude, i_j in [0, d_j). Party j of the ket |i_1...i_n>
// is entry j-1.
using MultiIndex = std::vector<std::uint32_t>;

// Coefficient of a basis ket: a Gaussian rational, or a symbolic parameter.
// Internally an affine form c_0 + sum_k c_k * a_k, which lets duplicate kets
// such as "a |00>" and "-a |00>" merge exactly. Parameter names are global
// across a state.
class Amplitude {
public:
    Amplitude() = default;
    Amplitude(GaussianRational value) : constant_(std::move(value)) {}  // NOLINT
    Amplitude(long value) : constant_(value) {}                         // NOLINT

    // Throws DomainError if name is not an identifier (or is the reserved "i").
    static Amplitude parameter(const std::string& name, GaussianRational scale = 1);
    static bool is_valid_parameter_name(std::string_view name);

    bool is_gaussian() const noexcept { return params_.empty(); }
    bool is_zero() const { return params_.empty() && constant_.is_zero(); }

    const GaussianRational& constant() const noexcept { return constant_; }
    // Parameter name -> nonzero coefficient.
    const std::map<std::string, GaussianRational>& parameters() const noexcept { return params_; }

    Amplitude& operator+=(const Amplitude& o);
    Amplitude& operator-=(const Amplitude& o);
    Amplitude& operator*=(const GaussianRational& s);
    friend Amplitude operator+(Amplitude a, const Amplitude& b) { return a += b; }
    friend Amplitude operator-(Amplitude a, const Amplitude& b) { return a -= b; }
    friend Amplitude operator*(Amplitude a, const GaussianRational& s) { return a *= s; }

    friend bool operator==(const Amplitude& a, const Amplitude& b) {
        return a.constant_ == b.constant_ && a.params_ == b.params_;
    }

    // Parseable by the coefficient grammar of the state file format.
    std::string to_string() const;

private:
    GaussianRational constant_;
    std::map<std::string, GaussianRational> params_;
};

using Term = std::pair<MultiIndex, Amplitude>;

// Sparse order-n coefficient tensor of a pure state. Immutable once built;
// never empty and never stores a zero amplitude.
class StateTensor {
public:
    const QuditDims& dims() const noexcept { return dims_; }
    std::size_t parties() const noexcept { return dims_.parties(); }
    const std::map<MultiIndex, Amplitude>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_parametric() const;
    std::set<std::string> parameter_names() const;

    friend bool operator==(const StateTensor&, const StateTensor&) = default;

private:
    friend StateTensor build_state(const QuditDims& dims, std::span<const Term> terms);
    StateTensor(QuditDims dims, std::map<MultiIndex, Amplitude> terms)
        : dims_(std::move(dims)), terms_(std::move(terms)) {}

    QuditDims dims_;
    std::map<MultiIndex, Amplitude> terms_;
};

// Duplicate indices are merged by addition and zero sums dropped.
// Throws DomainError on a malformed or out-of-range index and ZeroStateError
// if nothing survives.
StateTensor build_state(const QuditDims& dims, std::span<const Term> terms);

// Applies a d_site x d_site matrix to one tensor factor:
// c'(.., i_site, ..) = sum_k m(i_site, k) c(.., k, ..). Sites are 1-based.
// Throws DomainError on a bad site or mismatched matrix, ZeroStateError if the
// matrix annihilates the state.
StateTensor apply_local_operation(const StateTensor& state, std::size_t site, const DenseMatrix& matrix);

// Parses the line-oriented state format or the equivalent JSON document
// (selected by a leading '{'). Throws ParseError, DomainError or ZeroStateError.
StateTensor parse_state(std::string_view text);

// Line-oriented rendering that parse_state reads back to an equal tensor.
std::string serialize_state(const StateTensor& state);

}  // namespace multirank
