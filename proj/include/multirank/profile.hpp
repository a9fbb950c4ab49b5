#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "multirank/partition.hpp"
#include "multirank/rank.hpp"
#include "multirank/state.hpp"

namespace multirank {

inline constexpr std::uint64_t kDefaultSeed = 20240531;

struct ProfileOptions {
    RankPolicy policy = RankPolicy::fast_then_verify();
    std::uint64_t seed = kDefaultSeed;
    // Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 1;
    // At ell = n/2 keep only the member of each complementary pair that contains party 1.
    bool dedupe = false;
};

struct ProfileEntry {
    Bipartition bipartition;
    RankResult rank;
};

struct ProfileLevel {
    std::size_t ell = 0;
    std::vector<ProfileEntry> entries;

    std::vector<std::size_t> values() const;
};

struct MultirankProfile {
    QuditDims dims;
    std::vector<ProfileLevel> levels;
    RankPolicy policy;
    std::uint64_t seed = kDefaultSeed;
    bool deduped = false;

    // Rank values per level, in canonical bipartition order.
    std::vector<std::vector<std::size_t>> values() const;
    bool is_probabilistic() const;
};

// Ranks of every flattening with 1 <= |I| <= floor(n/2), grouped by |I| and
// ordered lexicographically in I. Each matrix draws its random stream from
// split_seed(seed, position in the full enumeration), so results do not
// depend on threading or on which levels are requested.
// Throws PolicyError when a parametric state meets a non-generic policy.
MultirankProfile multirank_profile(const StateTensor& state, const ProfileOptions& options = {});

// One level of multirank_profile. Throws DomainError unless 1 <= ell <= floor(n/2).
ProfileLevel profile_level(const StateTensor& state, std::size_t ell, const ProfileOptions& options = {});

// Nested-brace rendering, e.g. "{{2, 2, 2, 2}, {2, 4, 4, 4, 4, 2}}".
std::string format_nested(const std::vector<std::vector<std::size_t>>& values);

}  // namespace multirank
