#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "commands.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args) {
    args.insert(args.begin(), "lsym");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = lsym::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(json::parse(line));
    return out;
}

std::string without_timing(const std::string& text) {
    static const std::regex elapsed("\"elapsed_ms\":[-0-9.eE+]+");
    return std::regex_replace(text, elapsed, "\"elapsed_ms\":0");
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(Cli, Lemma32SweepEmitsOneLinePerCaseAndASummary) {
    auto r = cli({"verify-lemma32", "--max-n", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto recs = lines(r.out);
    // compositions of 2 and 3 (2 + 4) at both place kinds
    ASSERT_EQ(recs.size(), 13u);
    for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
        EXPECT_TRUE(recs[i]["equal"].get<bool>());
        EXPECT_TRUE(recs[i].contains("lhs") && recs[i].contains("rhs") && recs[i].contains("elapsed_ms"));
    }
    const json& summary = recs.back();
    EXPECT_EQ(summary["cases"], 12);
    EXPECT_EQ(summary["failed"], 0);
    EXPECT_EQ(summary["command"], "verify-lemma32");
}

TEST(Cli, Lemma32BelowMinimumIsAUsageError) {
    auto r = cli({"verify-lemma32", "--max-n", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("at least 2"), std::string::npos);
}

TEST(Cli, LimitsNeedForce) {
    EXPECT_EQ(cli({"verify-lemma32", "--max-n", "9"}).code, 2);
    EXPECT_EQ(cli({"derive", "--goal", "ThmA", "--n", "40"}).code, 2);
    EXPECT_EQ(cli({"--force", "derive", "--goal", "Delta", "--n", "40", "--no-steps"}).code, 0);
}

TEST(Cli, MalformedFlagsAreUsageErrors) {
    EXPECT_EQ(cli({"verify-prop34", "--max-n", "x"}).code, 2);
    EXPECT_EQ(cli({"verify-prop34", "--bogus"}).code, 2);
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"--jobs", "0", "verify-prop34"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Prop34IncludesTheHalfSwapCase) {
    auto r = cli({"verify-prop34", "--max-n", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"case\":\"prop34:n=4,m=2,l=2,InertHalfSwap\""), std::string::npos);
}

TEST(Cli, SummaryFlagGivesASingleObject) {
    auto r = cli({"--summary", "verify-prop34", "--max-n", "3"});
    ASSERT_EQ(r.code, 0);
    auto recs = lines(r.out);
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_TRUE(recs[0]["summary"].get<bool>());
    EXPECT_EQ(recs[0]["passed"], recs[0]["cases"]);
}

TEST(Cli, OutputFile) {
    auto path = (std::filesystem::temp_directory_path() / "lsym_cli_out.ndjson").string();
    auto r = cli({"--out", path, "gauss", "--mode", "quadratic", "--D", "-7"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(lines(buf.str()).size(), 2u);
    std::filesystem::remove(path);
    EXPECT_EQ(cli({"--out", "/nonexistent-dir/x.json", "gauss", "--D", "-7"}).code, 2);
}

TEST(Cli, DeriveReportsTheTraceAndTheExponent) {
    auto r = cli({"derive", "--goal", "ThmB", "--n", "4", "--d", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rec = lines(r.out).front();
    EXPECT_EQ(rec["exponent"], 4);
    EXPECT_EQ(rec["expected"], 4);
    EXPECT_FALSE(rec["steps"].empty());
    for (const auto& s : rec["steps"]) EXPECT_TRUE(s.contains("rule") && s.contains("tag") && s.contains("replacement"));
    EXPECT_EQ(lines(cli({"derive", "--goal", "Delta", "--n", "2"}).out).front()["exponent"], 3);
    EXPECT_EQ(lines(cli({"derive", "--goal", "ThmC", "--n", "3", "--m", "1", "--d", "2"}).out).front()["exponent"], 0);
}

TEST(Cli, DeriveParameterErrors) {
    EXPECT_EQ(cli({"derive", "--goal", "ThmZ"}).code, 2);
    EXPECT_EQ(cli({"derive", "--goal", "ThmA", "--n", "1"}).code, 2);
    EXPECT_EQ(cli({"derive", "--goal", "ThmB", "--n", "3", "--shape", "1,x"}).code, 2);
    EXPECT_EQ(cli({"derive", "--goal", "asai-induced", "--n", "3", "--cycle", "2,1,3"}).code, 2);
    EXPECT_EQ(cli({"derive", "--goal", "asai-induced", "--n", "3", "--cycle", "3,1,2"}).code, 0);
    EXPECT_EQ(cli({"derive", "--goal", "all"}).code, 2);
}

TEST(Cli, CritZeroWeights) {
    auto path = temp_file("lsym_zero.json", R"({"n": 2, "d": 1, "mu": [[0, 0]], "r": "0", "mu_prime": [[0]], "s": "0"})");
    auto r = cli({"crit", path});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rec = lines(r.out).front();
    EXPECT_EQ(rec["rankin_selberg"]["critical"], "{1/2}");
    EXPECT_TRUE(rec["rankin_selberg"]["piano"].get<bool>());
    EXPECT_EQ(rec["asai"]["same"], "{0, 1}");
}

TEST(Cli, CritRejectsBadInputWithContext) {
    auto increasing = temp_file("lsym_incr.json", R"({"n": 2, "d": 1, "mu": [[0, 1]], "r": "0"})");
    auto r = cli({"crit", increasing});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("not weakly decreasing"), std::string::npos);

    auto broken = temp_file("lsym_broken.json", "{\"n\": 2,\n \"d\": 1,\n \"mu\": [[0, 0]] \"r\": 0}");
    r = cli({"crit", broken});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find(":3:"), std::string::npos) << r.err;

    auto unknown = temp_file("lsym_unknown.json", R"({"n": 2, "d": 1, "mu": [[0, 0]], "rr": 0})");
    EXPECT_EQ(cli({"crit", unknown}).code, 2);
    auto shape = temp_file("lsym_shape.json", R"({"n": 3, "d": 1, "mu": [[0, 0]]})");
    EXPECT_EQ(cli({"crit", shape}).code, 2);
    EXPECT_EQ(cli({"crit", "/nonexistent/weights.json"}).code, 2);
}

#ifdef LSYM_DATA_DIR
TEST(Cli, SampleWeightFile) {
    auto r = cli({"crit", std::string(LSYM_DATA_DIR) + "/weights_sample.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out).size(), 6u);
}
#endif

TEST(Cli, GaussModes) {
    EXPECT_EQ(cli({"gauss", "--mode", "quadratic", "--D", "-7"}).code, 0);
    EXPECT_EQ(cli({"gauss", "--mode", "classnumber", "--D", "-4", "--h", "1", "--w", "4"}).code, 0);
    EXPECT_EQ(cli({"gauss", "--mode", "classnumber", "--D", "-4", "--h", "2", "--w", "4"}).code, 1);
    EXPECT_EQ(cli({"gauss", "--mode", "quadratic", "--D", "-6"}).code, 2);
    EXPECT_EQ(cli({"gauss", "--mode", "quadratic"}).code, 2);
    EXPECT_EQ(cli({"gauss", "--mode", "cubic", "--D", "-7"}).code, 2);
    auto r = cli({"--summary", "gauss", "--mode", "modulus", "--sweep"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).front()["failed"], 0);
}

TEST(Cli, ReportsAreDeterministicAcrossRunsAndThreadCounts) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify-lemma32", "--max-n", "4"},
             {"verify-prop34", "--max-n", "4"},
             {"derive", "--goal", "all", "--sweep", "--n", "4", "--d", "2"},
             {"gauss", "--mode", "quadratic", "--sweep"}}) {
        auto one = args, four = args;
        one.insert(one.begin(), {"--jobs", "1"});
        four.insert(four.begin(), {"--jobs", "4"});
        auto a = cli(one), b = cli(four), c = cli(four);
        ASSERT_EQ(a.code, 0);
        EXPECT_EQ(without_timing(a.out), without_timing(b.out)) << args.front();
        EXPECT_EQ(without_timing(b.out), without_timing(c.out)) << args.front();
    }
}
