// End-to-end runs of the aqci binary.

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    auto dir = fs::temp_directory_path() / ("aqci_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

Run run(const std::string& args) {
    auto err_path = scratch() / "stderr.txt";
    std::string cmd = std::string(AQCI_CLI) + " " + args + " 2>" + err_path.string();
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    return r;
}

std::string fixture(const std::string& name) { return std::string(AQCI_DATA_DIR) + "/" + name; }

const std::string kFirst = fixture("cyclic_n3_a2.json");
const std::string kSecond = fixture("two_pairs_a2_b2.json");

}  // namespace

TEST(Cli, ValidateExamples) {
    for (const auto& f : {kFirst, kSecond}) {
        auto r = run("validate " + f);
        EXPECT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(r.out, "valid\n");
        auto j = run("--json validate " + f);
        EXPECT_EQ(j.code, 0);
        EXPECT_TRUE(nlohmann::json::parse(j.out)["valid"].get<bool>());
    }
}

TEST(Cli, DistinctErrorMessages) {
    auto missing = run("validate /nonexistent/datum.json");
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("file not found"), std::string::npos);
    EXPECT_TRUE(missing.out.empty());

    auto bad_path = scratch() / "bad.json";
    std::ofstream(bad_path) << "{\"n\": 2, \"sets\": [";
    auto malformed = run("info " + bad_path.string());
    EXPECT_EQ(malformed.code, 1);
    EXPECT_NE(malformed.err.find("malformed JSON"), std::string::npos);
    EXPECT_TRUE(malformed.out.empty());

    auto invalid = run("info " + fixture("invalid_siblings.json"));
    EXPECT_EQ(invalid.code, 1);
    EXPECT_NE(invalid.err.find("axiom violation [axiom5_sibling_weights]"), std::string::npos);
    EXPECT_TRUE(invalid.out.empty());

    auto v = run("--json validate " + fixture("invalid_siblings.json"));
    EXPECT_EQ(v.code, 1);
    EXPECT_FALSE(nlohmann::json::parse(v.out)["valid"].get<bool>());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("lct " + kFirst + " --method magic").code, 2);
    EXPECT_EQ(run("enumerate").code, 2);
    EXPECT_EQ(run("verify --n-max 0").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, InfoFirstExample) {
    auto r = run("info " + kFirst);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("emb: 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("lct (recursion): 3/2\n"), std::string::npos);
    EXPECT_NE(r.out.find("|G| (recursion): 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("e: 2 (exact)\n"), std::string::npos);
    auto j = nlohmann::json::parse(run("--json info " + kFirst).out);
    EXPECT_EQ(j["invariants"]["emb"], 4);
    EXPECT_EQ(j["invariants"]["lct"], "3/2");
    EXPECT_EQ(j["invariants"]["group_order"], "4");
    EXPECT_EQ(j["invariants"]["group_order_lattice"], "4");
    EXPECT_EQ(j["multiplicity"]["value"], "2");
    EXPECT_EQ(j["closure_power"], "2");
}

TEST(Cli, InfoSecondExample) {
    auto j = nlohmann::json::parse(run("--json info " + kSecond).out);
    EXPECT_EQ(j["invariants"]["emb"], 6);
    EXPECT_EQ(j["invariants"]["lct"], "2");
    EXPECT_EQ(j["invariants"]["group_order"], "4");
    EXPECT_EQ(j["multiplicity"]["value"], "4");
    EXPECT_EQ(j["bounds"]["lct_power"], "4");
}

TEST(Cli, LctMethods) {
    EXPECT_EQ(run("lct " + kFirst + " --method recursion").out, "recursion: 3/2\n");
    EXPECT_EQ(run("lct " + kFirst + " --method lp").out, "lp: 3/2\n");
    EXPECT_EQ(run("lct " + kSecond).out, "recursion: 2\nlp: 2\n");
    auto j = nlohmann::json::parse(run("--json lct " + kSecond + " --method both").out);
    EXPECT_TRUE(j["agree"].get<bool>());
    EXPECT_EQ(j["lp"], j["recursion"]);
    EXPECT_TRUE(j.contains("lp_certificate"));
}

TEST(Cli, MultMethods) {
    EXPECT_EQ(run("mult " + kFirst).out.substr(0, 14), "e: 2 (exact)\n ");
    auto oracle = run("mult " + kSecond + " --method oracle --k-max 10 --point-ceiling 100000");
    EXPECT_EQ(oracle.code, 0);
    EXPECT_EQ(oracle.out.substr(0, 14), "e: 4 (oracle)\n");
    auto bounds = nlohmann::json::parse(run("--json mult " + kFirst + " --method bounds").out);
    EXPECT_EQ(bounds["lower"], "2");
    EXPECT_EQ(bounds["upper"], "2");
    auto starved = run("mult " + kSecond + " --method oracle --point-ceiling 5");
    EXPECT_EQ(starved.code, 0);
    EXPECT_NE(starved.out.find("budget exhausted"), std::string::npos);
    auto j = nlohmann::json::parse(run("--json mult " + kSecond + " --method auto").out);
    EXPECT_EQ(j["result"]["status"], "exact");
}

TEST(Cli, Closure) {
    EXPECT_EQ(run("closure " + kFirst).out, "closure is m^2\n");
    EXPECT_EQ(run("closure " + fixture("cyclic_n3_a4.json")).out, "closure is not a power of m\n");
    EXPECT_EQ(nlohmann::json::parse(run("--json closure " + kSecond).out)["closure_power"], "2");
}

TEST(Cli, Dot) {
    auto r = run("dot " + kSecond);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("digraph special_datum {", 0), 0u);
    std::size_t edges = 0;
    for (std::size_t p = 0; (p = r.out.find(" -> ", p)) != std::string::npos; ++p) ++edges;
    EXPECT_EQ(edges, 4u);
}

TEST(Cli, Enumerate) {
    auto r = run("enumerate --n 2 --max-ratio 3 --jsonl");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
    auto j = nlohmann::json::parse(run("--json enumerate --n 3 --max-ratio 2").out);
    EXPECT_EQ(j["count"], 4);
    auto up = nlohmann::json::parse(run("--json enumerate --n 3 --max-ratio 2 --up-to").out);
    EXPECT_EQ(up["count"], 1 + 2 + 4);
    EXPECT_NE(run("enumerate --n 2").out.find("3 isomorphism classes"), std::string::npos);
}

TEST(Cli, VerifyAcceptanceBudget) {
    auto r = run("verify --n-max 3 --max-ratio 3");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("failed data: 0"), std::string::npos);
}

TEST(Cli, VerifySingleDatum) {
    for (const auto& f : {kFirst, kSecond}) {
        auto j = nlohmann::json::parse(run("--json verify --datum " + f).out);
        EXPECT_EQ(j["data"], 1);
        EXPECT_EQ(j["failed_data"], 0);
    }
    auto starved = run("--json verify --datum " + kSecond + " --k-max 4 --point-ceiling 1000");
    EXPECT_EQ(starved.code, 0);
    auto j = nlohmann::json::parse(starved.out);
    EXPECT_EQ(j["oracle_unstabilized"], 1);
    EXPECT_EQ(j["skip_rate"], "1");
    EXPECT_GT(j["checks"]["C5"]["skip"].get<int>(), 0);
}

TEST(Cli, VerifyReportsAreDeterministic) {
    auto dir = scratch();
    auto a = (dir / "a.json").string(), b = (dir / "b.json").string();
    EXPECT_EQ(run("verify --n-max 3 --max-ratio 3 --report " + a).code, 0);
    EXPECT_EQ(run("verify --n-max 3 --max-ratio 3 --jobs 3 --report " + b).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(slurp(dir / "a.jsonl"), slurp(dir / "b.jsonl"));
    auto summary = nlohmann::json::parse(slurp(a));
    EXPECT_TRUE(summary["all_pass"].get<bool>());
    std::istringstream lines(slurp(dir / "a.jsonl"));
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        auto rec = nlohmann::json::parse(line);
        EXPECT_TRUE(rec.contains("datum"));
        ++count;
    }
    EXPECT_EQ(count, summary["data"].get<std::size_t>());
}
