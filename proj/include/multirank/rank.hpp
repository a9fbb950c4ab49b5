#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "multirank/error.hpp"
#include "multirank/flatten.hpp"
#include "multirank/matrix.hpp"

namespace multirank {

enum class RankMode { exact, modular, generic };
enum class Certainty { exact, probabilistic };

struct RankResult {
    std::size_t value = 0;
    RankMode mode = RankMode::exact;
    Certainty certainty = Certainty::exact;
    std::uint64_t prime = 0;   // modular and generic modes
    std::size_t trials = 0;    // generic mode
    // Generic mode: Schwartz-Zippel bound on missing the generic rank,
    // (min(rows, cols) / p)^trials. Zero otherwise.
    double failure_bound = 0.0;

    friend bool operator==(const RankResult&, const RankResult&) = default;
};

std::string to_string(RankMode mode);
std::string to_string(Certainty certainty);

// The prime cannot be used for this matrix; pick another one.
class PrimeDividesDenominator : public PolicyError {
public:
    explicit PrimeDividesDenominator(std::uint64_t p)
        : PolicyError("prime " + std::to_string(p) + " divides an entry denominator"), prime(p) {}
    std::uint64_t prime;
};

// Twenty primes p = 3 (mod 4) just below 2^31, largest first.
const std::array<std::uint64_t, 20>& admissible_primes();

// p is prime, p = 3 (mod 4) and p < 2^32.
bool is_admissible_prime(std::uint64_t p);

// Independent 64-bit seed for stream `index` derived from `master`.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

// Rank over Q(i). Rows are scaled to Gaussian integers by their own
// denominator lcm, then reduced by fraction-free elimination over Z[i].
// Throws PolicyError if the matrix has parametric entries.
RankResult exact_rank(const SparseMatrix& matrix);

// Rank over GF(p)[i]/(i^2+1), a field because p = 3 (mod 4). Never exceeds the
// exact rank. Throws PolicyError for an inadmissible p or a parametric matrix,
// PrimeDividesDenominator if some entry cannot be reduced mod p.
RankResult modular_rank(const SparseMatrix& matrix, std::uint64_t p);

// Maximum modular rank over `trials` independent uniform substitutions of the
// parameters by elements of GF(p)[i]. Exact entries go through unchanged.
RankResult generic_rank(const SparseMatrix& matrix, std::size_t trials, std::uint64_t p, std::uint64_t seed);

struct RankPolicy {
    enum class Kind { exact, fast_then_verify, modular_only, generic };

    Kind kind = Kind::fast_then_verify;
    std::uint64_t prime = 0;
    std::size_t trials = 0;

    static RankPolicy exact() { return {Kind::exact, 0, 0}; }
    static RankPolicy fast_then_verify() { return {Kind::fast_then_verify, 0, 0}; }
    static RankPolicy modular_only(std::uint64_t p) { return {Kind::modular_only, p, 0}; }
    static RankPolicy generic(std::size_t trials, std::uint64_t p) { return {Kind::generic, p, trials}; }

    // "exact", "fast", "mod:<p>", "generic:<trials>,<p>". Throws PolicyError.
    static RankPolicy parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const RankPolicy&, const RankPolicy&) = default;
};

// fast_then_verify: modular rank at a prime drawn from admissible_primes()
// with `seed`; accepted as exact when it meets the upper bound
// min(nonzero rows, nonzero columns), otherwise exact_rank decides.
// Throws PolicyError for a parametric matrix under any non-generic policy.
RankResult rank_dispatch(const SparseMatrix& matrix, const RankPolicy& policy, std::uint64_t seed);

// Test oracle: largest k with a nonzero k x k minor, by exhaustive Laplace
// expansion. Both dimensions must be <= 6 (DomainError otherwise).
std::size_t oracle_rank_minors(const DenseMatrix& matrix);

}  // namespace multirank
