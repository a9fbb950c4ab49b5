#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "multirank/classify.hpp"
#include "multirank/profile.hpp"
#include "multirank/rank.hpp"
#include "multirank/state.hpp"

namespace multirank::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,  // bad flags or unreadable input
    kParse = 2,
    kZeroState = 3,
    kPolicy = 4,
};

enum class Format { text, json };

struct RunConfig {
    std::string input;                 // path, or "-" for stdin
    std::optional<std::size_t> level;  // nullopt = all levels
    RankPolicy policy = RankPolicy::fast_then_verify();
    std::uint64_t seed = kDefaultSeed;
    Format format = Format::text;
    bool dedupe = false;
    bool dump_matrices = false;
    unsigned threads = 1;
};

// Profile first (nested braces), then "verdict: ..." unless a single level
// was requested, then optional qualifier and matrix dump lines.
std::string render_text(const StateTensor& state, const MultirankProfile& profile, const RunConfig& config);
nlohmann::json render_json(const StateTensor& state, const MultirankProfile& profile, const RunConfig& config);

// Executes one command. The report goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and calls run.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace multirank::cli
