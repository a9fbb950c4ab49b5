#include "multirank/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "multirank/error.hpp"
#include "multirank/flatten.hpp"

namespace multirank::cli {
namespace {

constexpr std::uint64_t kMaxDumpCells = 1u << 20;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

std::string describe_generic(const MultirankProfile& profile) {
    double bound = 0.0;
    for (const auto& level : profile.levels)
        for (const auto& e : level.entries) bound = std::max(bound, e.rank.failure_bound);
    std::ostringstream s;
    s << "rank: generic, " << profile.policy.trials << " trial(s) over GF(p)[i] with p = " << profile.policy.prime
      << "; per-matrix failure bound <= " << bound;
    return s.str();
}

nlohmann::json rank_json(const RankResult& r) {
    nlohmann::json j = {{"rank", r.value}, {"mode", to_string(r.mode)}, {"certainty", to_string(r.certainty)}};
    if (r.mode != RankMode::exact) j["prime"] = r.prime;
    if (r.mode == RankMode::generic) {
        j["trials"] = r.trials;
        j["failure_bound"] = r.failure_bound;
    }
    return j;
}

}  // namespace

std::string render_text(const StateTensor& state, const MultirankProfile& profile, const RunConfig& config) {
    std::ostringstream out;
    out << format_nested(profile.values()) << "\n";
    if (!config.level) {
        const EntanglementVerdict v = verdict(profile);
        out << "verdict: " << verdict_label(v) << (v.generic ? " (generic)" : "") << "\n";
        if (!v.gme) {
            out << "product cuts:";
            for (const auto& cut : v.product_cuts) out << " " << cut.label();
            out << "\n";
        }
    }
    if (profile.is_probabilistic()) out << describe_generic(profile) << "\n";
    if (profile.deduped && state.parties() % 2 == 0 && profile.levels.back().ell == state.parties() / 2) {
        out << "level " << state.parties() / 2 << " deduplicated: each I stands for the pair (I, complement)\n";
    }
    if (config.dump_matrices) {
        for (const auto& level : profile.levels) {
            for (const auto& e : level.entries) {
                const auto& b = e.bipartition;
                out << "M " << b.label() << " (" << b.row_dim() << "x" << b.col_dim() << "), rank " << e.rank.value
                    << ":\n";
                if (b.row_dim() * b.col_dim() > kMaxDumpCells) {
                    out << "  (too large to dump)\n";
                    continue;
                }
                for (const auto& row : dense_rows(flatten(state, b).matrix)) {
                    out << " ";
                    for (const auto& cell : row) out << " " << cell;
                    out << "\n";
                }
            }
        }
    }
    return out.str();
}

nlohmann::json render_json(const StateTensor& state, const MultirankProfile& profile, const RunConfig& config) {
    using nlohmann::json;
    json doc;
    doc["dims"] = state.dims().values();
    doc["policy"] = profile.policy.to_string();
    doc["seed"] = profile.seed;
    doc["deduped"] = profile.deduped;
    doc["profile"] = profile.values();
    json levels = json::array();
    for (const auto& level : profile.levels) {
        json entries = json::array();
        const bool paired = profile.deduped && 2 * level.ell == state.parties();
        for (const auto& e : level.entries) {
            const auto& b = e.bipartition;
            json j = rank_json(e.rank);
            j["label"] = b.label();
            j["I"] = b.parties();
            j["complement"] = b.complement();
            j["rows"] = b.row_dim();
            j["cols"] = b.col_dim();
            if (paired) j["paired_with"] = b.complement();
            if (config.dump_matrices && b.row_dim() * b.col_dim() <= kMaxDumpCells)
                j["matrix"] = dense_rows(flatten(state, b).matrix);
            entries.push_back(std::move(j));
        }
        levels.push_back({{"ell", level.ell}, {"entries", std::move(entries)}});
    }
    doc["levels"] = std::move(levels);
    if (config.level) {
        doc["verdict"] = nullptr;
    } else {
        const EntanglementVerdict v = verdict(profile);
        json cuts = json::array();
        for (const auto& cut : v.product_cuts) cuts.push_back(cut.parties());
        doc["verdict"] = {{"label", verdict_label(v)},
                          {"gme", v.gme},
                          {"fully_product", v.fully_product},
                          {"product_cuts", std::move(cuts)},
                          {"qualifier", v.generic ? "generic" : "exact"}};
    }
    return doc;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::string text;
    try {
        text = read_input(config.input);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    try {
        const StateTensor state = parse_state(text);
        if (config.policy.kind == RankPolicy::Kind::generic && !state.is_parametric()) {
            err << "warning: generic rank policy on a state without parameters; results are still modular\n";
        }
        ProfileOptions options;
        options.policy = config.policy;
        options.seed = config.seed;
        options.threads = config.threads;
        options.dedupe = config.dedupe;
        if (config.level && (*config.level < 1 || *config.level > state.parties() / 2)) {
            err << "error: --levels " << *config.level << " out of range 1.." << state.parties() / 2 << "\n";
            return kUsage;
        }
        const MultirankProfile profile =
            config.level ? MultirankProfile{state.dims(), {profile_level(state, *config.level, options)},
                                            config.policy, config.seed, config.dedupe}
                         : multirank_profile(state, options);
        if (config.format == Format::json) {
            out << render_json(state, profile, config).dump(2) << "\n";
        } else {
            out << render_text(state, profile, config);
        }
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ZeroStateError& e) {
        err << "error: " << e.what() << "\n";
        return kZeroState;
    } catch (const PolicyError& e) {
        err << "policy error: " << e.what() << "\n";
        return kPolicy;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flattening ranks (l-multiranks) and entanglement verdict of a pure multipartite state"};
    RunConfig config;
    std::string levels = "all";
    std::string policy = "fast";
    std::string format = "text";
    app.add_option("input", config.input, "State file ('-' for stdin)")->required();
    app.add_option("--levels", levels, "all, or a single level l in 1..n/2")->capture_default_str();
    app.add_option("--rank", policy, "exact | fast | mod:<p> | generic:<trials>,<p>")->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for prime selection and parameter sampling")->capture_default_str();
    app.add_option("--format", format, "text | json")->capture_default_str();
    app.add_flag("--dedupe", config.dedupe, "At l = n/2 print one member of each complementary pair");
    app.add_flag("--dump-matrices", config.dump_matrices, "Print every flattening as dense exact rows");
    app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (levels != "all") {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(levels, &used);
            if (used != levels.size()) throw std::invalid_argument(levels);
            config.level = v;
        } catch (const std::exception&) {
            err << "error: --levels expects 'all' or a positive integer, got '" << levels << "'\n";
            return kUsage;
        }
    }
    if (format == "text") {
        config.format = Format::text;
    } else if (format == "json" || format == "structured") {
        config.format = Format::json;
    } else {
        err << "error: --format expects 'text' or 'json', got '" << format << "'\n";
        return kUsage;
    }
    try {
        config.policy = RankPolicy::parse(policy);
    } catch (const PolicyError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return run(config, out, err);
}

}  // namespace multirank::cli
