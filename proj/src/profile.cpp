#include "multirank/profile.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "multirank/flatten.hpp"

namespace multirank {
namespace {

struct Task {
    std::size_t level;
    std::size_t slot;
    std::uint64_t stream;
};

std::vector<ProfileLevel> compute_levels(const StateTensor& state, const std::vector<std::size_t>& ells,
                                         const ProfileOptions& options) {
    if (state.is_parametric() && options.policy.kind != RankPolicy::Kind::generic) {
        throw PolicyError("state has parametric amplitudes; the '" + options.policy.to_string() +
                          "' policy needs numeric ones (use generic:<trials>,<p>)");
    }
    const QuditDims& dims = state.dims();
    const std::size_t n = dims.parties();

    std::vector<ProfileLevel> levels;
    std::vector<Task> tasks;
    for (std::size_t ell : ells) {
        std::vector<Bipartition> cuts = enumerate_bipartitions(dims, ell);
        std::uint64_t stream = 0;
        for (std::size_t lower = 1; lower < ell; ++lower) stream += binomial(n, lower);

        ProfileLevel level;
        level.ell = ell;
        for (auto& cut : cuts) {
            const bool redundant = options.dedupe && 2 * ell == n && cut.parties().front() != 1;
            if (!redundant) {
                tasks.push_back({levels.size(), level.entries.size(), stream});
                level.entries.push_back({std::move(cut), RankResult{}});
            }
            ++stream;
        }
        levels.push_back(std::move(level));
    }

    auto run = [&](const Task& t) {
        ProfileEntry& e = levels[t.level].entries[t.slot];
        const FlattenedMatrix flat = flatten(state, e.bipartition);
        e.rank = rank_dispatch(flat.matrix, options.policy, split_seed(options.seed, t.stream));
    };

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
    if (threads <= 1) {
        for (const Task& t : tasks) run(t);
        return levels;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t k = next++; k < tasks.size(); k = next++) {
                    try {
                        run(tasks[k]);
                    } catch (...) {
                        errors[k] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return levels;
}

}  // namespace

std::vector<std::size_t> ProfileLevel::values() const {
    std::vector<std::size_t> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.rank.value);
    return out;
}

std::vector<std::vector<std::size_t>> MultirankProfile::values() const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& level : levels) out.push_back(level.values());
    return out;
}

bool MultirankProfile::is_probabilistic() const {
    for (const auto& level : levels)
        for (const auto& e : level.entries)
            if (e.rank.certainty == Certainty::probabilistic) return true;
    return false;
}

MultirankProfile multirank_profile(const StateTensor& state, const ProfileOptions& options) {
    std::vector<std::size_t> ells;
    for (std::size_t ell = 1; ell <= state.parties() / 2; ++ell) ells.push_back(ell);
    return MultirankProfile{state.dims(), compute_levels(state, ells, options), options.policy, options.seed,
                            options.dedupe};
}

ProfileLevel profile_level(const StateTensor& state, std::size_t ell, const ProfileOptions& options) {
    if (ell < 1 || ell > state.parties() / 2) {
        throw DomainError("level " + std::to_string(ell) + " out of range 1.." + std::to_string(state.parties() / 2));
    }
    return std::move(compute_levels(state, {ell}, options).front());
}

std::string format_nested(const std::vector<std::vector<std::size_t>>& values) {
    std::string out = "{";
    for (std::size_t l = 0; l < values.size(); ++l) {
        if (l > 0) out += ", ";
        out += "{";
        for (std::size_t k = 0; k < values[l].size(); ++k) {
            if (k > 0) out += ", ";
            out += std::to_string(values[l][k]);
        }
        out += "}";
    }
    return out + "}";
}

}  // namespace multirank
