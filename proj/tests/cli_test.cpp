#include "multirank/cli.hpp"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

using namespace multirank;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "multirank");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(MULTIRANK_FIXTURES) + "/" + name; }

}  // namespace

TEST(Cli, WStateDefaults) {
    const Outcome r = invoke({fixture("w3.state")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "{{2, 2, 2}}\nverdict: GME\n");
}

TEST(Cli, FourQubitState) {
    const Outcome r = invoke({fixture("cluster4.state")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "{{2, 2, 2, 2}, {2, 4, 4, 4, 4, 2}}");
}

TEST(Cli, SingleLevel) {
    const Outcome r = invoke({fixture("cluster4.state"), "--levels", "2", "--rank", "exact"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "{{2, 4, 4, 4, 4, 2}}\n");
    EXPECT_EQ(invoke({fixture("cluster4.state"), "--levels", "3"}).code, cli::kUsage);
    EXPECT_EQ(invoke({fixture("cluster4.state"), "--levels", "x"}).code, cli::kUsage);
}

TEST(Cli, ExitCodes) {
    const Outcome empty = invoke({fixture("empty.state")});
    EXPECT_EQ(empty.code, cli::kParse);
    EXPECT_NE(empty.err.find("1:1"), std::string::npos);
    EXPECT_EQ(invoke({fixture("does-not-exist.state")}).code, cli::kUsage);
    EXPECT_EQ(invoke({fixture("param_ghz3.state")}).code, cli::kPolicy);
    EXPECT_EQ(invoke({fixture("param_ghz3.state"), "--rank", "exact"}).code, cli::kPolicy);
    EXPECT_EQ(invoke({fixture("w3.state"), "--rank", "mod:5"}).code, cli::kUsage);
    EXPECT_EQ(invoke({fixture("w3.state"), "--format", "xml"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"--bogus"}).code, cli::kUsage);
}

TEST(Cli, ZeroStateExitCode) {
    const std::string path = ::testing::TempDir() + "zero.state";
    {
        std::ofstream f(path);
        f << "dims 2 2\n1 |00>\n-1 |00>\n";
    }
    EXPECT_EQ(invoke({path}).code, cli::kZeroState);
}

TEST(Cli, GenericPolicy) {
    const Outcome r = invoke({fixture("param_ghz3.state"), "--rank", "generic:5,2147483647", "--seed", "7"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "{{2, 2, 2}}");
    EXPECT_NE(r.out.find("verdict: GME (generic)"), std::string::npos);
    EXPECT_NE(r.out.find("failure bound"), std::string::npos);

    const Outcome warn = invoke({fixture("w3.state"), "--rank", "generic:2,7"});
    EXPECT_EQ(warn.code, cli::kOk);
    EXPECT_NE(warn.err.find("warning"), std::string::npos);
}

TEST(Cli, TextOutputIsDeterministic) {
    for (const char* policy : {"fast", "exact", "generic:3,7"}) {
        const Outcome a = invoke({fixture("qutrit6.state"), "--rank", policy, "--dump-matrices"});
        const Outcome b = invoke({fixture("qutrit6.state"), "--rank", policy, "--dump-matrices", "--threads", "4"});
        EXPECT_EQ(a.code, cli::kOk);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, DumpMatrices) {
    const Outcome r = invoke({fixture("w3.state"), "--dump-matrices"});
    EXPECT_NE(r.out.find("M I=[1] (2x4), rank 2:\n  0 1 1 0\n  1 0 0 0\n"), std::string::npos);
}

TEST(Cli, DedupeHalvesMiddleLevel) {
    const Outcome r = invoke({fixture("qutrit6.state"), "--dedupe"});
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
              "{{3, 3, 3, 3, 3, 3}, {3, 4, 4, 4, 4, 4, 4, 4, 4, 3, 4, 4, 4, 4, 3}, {4, 4, 4, 4, 4, 4, 4, 4, 4, 4}}");
    EXPECT_NE(r.out.find("deduplicated"), std::string::npos);
}

TEST(Cli, JsonReportRoundTrips) {
    const Outcome r = invoke({fixture("qutrit6.state"), "--format", "json", "--rank", "exact"});
    ASSERT_EQ(r.code, cli::kOk);
    const nlohmann::json doc = nlohmann::json::parse(r.out);

    const StateTensor s = parse_state(R"(dims 3 3 3 3 3 3 ; 1 |000000> ; 1 |111111> ; 1 |222222> ; 1 |001122>)");
    ProfileOptions options;
    options.policy = RankPolicy::exact();
    const MultirankProfile p = multirank_profile(s, options);

    EXPECT_EQ(doc["profile"].get<std::vector<std::vector<std::size_t>>>(), p.values());
    ASSERT_EQ(doc["levels"].size(), p.levels.size());
    for (std::size_t l = 0; l < p.levels.size(); ++l) {
        const auto& entries = doc["levels"][l]["entries"];
        ASSERT_EQ(entries.size(), p.levels[l].entries.size());
        for (std::size_t k = 0; k < entries.size(); ++k) {
            EXPECT_EQ(entries[k]["rank"].get<std::size_t>(), p.levels[l].entries[k].rank.value);
            EXPECT_EQ(entries[k]["I"].get<std::vector<std::size_t>>(), p.levels[l].entries[k].bipartition.parties());
            EXPECT_EQ(entries[k]["label"], p.levels[l].entries[k].bipartition.label());
        }
    }
    EXPECT_EQ(doc["dims"], nlohmann::json({3, 3, 3, 3, 3, 3}));
    EXPECT_EQ(doc["policy"], "exact");
    EXPECT_EQ(doc["seed"], kDefaultSeed);
    EXPECT_EQ(doc["verdict"]["gme"], true);
    EXPECT_EQ(doc["verdict"]["qualifier"], "exact");
    EXPECT_EQ(doc["verdict"]["label"], "GME");
}

TEST(Cli, JsonInputDocument) {
    const std::string path = ::testing::TempDir() + "w3.json";
    {
        std::ofstream f(path);
        f << R"({"dims":[2,2,2],"terms":[{"coeff":"1","ket":[0,0,1]},{"coeff":"1","ket":[0,1,0]},{"coeff":"1","ket":[1,0,0]}]})";
    }
    EXPECT_EQ(invoke({path}).out, "{{2, 2, 2}}\nverdict: GME\n");
}

TEST(Cli, BiseparableReportListsCuts) {
    const std::string path = ::testing::TempDir() + "bisep.state";
    {
        std::ofstream f(path);
        f << "dims 2 2 2\n1 |000>\n1 |011>\n";
    }
    const Outcome r = invoke({path});
    EXPECT_EQ(r.out, "{{1, 2, 2}}\nverdict: biseparable\nproduct cuts: I=[1]\n");
    const nlohmann::json doc = nlohmann::json::parse(invoke({path, "--format", "json"}).out);
    EXPECT_EQ(doc["verdict"]["product_cuts"], nlohmann::json::array({nlohmann::json::array({1})}));
}
