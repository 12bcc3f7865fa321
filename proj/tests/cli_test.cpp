#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "common.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Result {
    int code = -1;
    std::string out;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("wcount_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& text) {
        auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }

    Result run(const std::string& args) {
        auto out = dir_ / "stdout.txt";
        std::string cmd = std::string(WCOUNT_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
        int status = std::system(cmd.c_str());
        Result r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        std::ifstream in(out);
        std::stringstream ss;
        ss << in.rdbuf();
        r.out = ss.str();
        return r;
    }

    json run_json(const std::string& args, int expected_code = 0) {
        auto r = run("--json " + args);
        EXPECT_EQ(r.code, expected_code) << args;
        return json::parse(r.out);
    }

    std::string i1(const std::string& weight = "0.1") {
        return file("i1_" + weight + ".txt",
                    wcount::testing::instance_text(1, 2, {{1, 1, 1}, {1, 2, -1}}, {1, 1}, weight));
    }

    fs::path dir_;
};

TEST_F(CliTest, ApproxReportsTheOrderAndBound) {
    auto j = run_json("approx " + i1() + " --exact");
    EXPECT_EQ(j["s"], 7);
    EXPECT_NEAR(j["gamma"].get<double>(), 2.3, 1e-15);
    EXPECT_LE(j["bound"].get<double>(), 1e-3);
    EXPECT_TRUE(j["certified"].get<bool>());
    EXPECT_NEAR(j["value"]["re"].get<double>(), 1.01, 1e-3);
    EXPECT_NEAR(j["exact"]["re"].get<double>(), 1.01, 1e-15);
    EXPECT_LE(j["log_error"].get<double>(), 1e-3);
}

TEST_F(CliTest, OracleIsExact) {
    auto j = run_json("oracle " + i1());
    EXPECT_EQ(j["exact"]["re"], "101/100");
    EXPECT_EQ(j["points"], 2);
    EXPECT_EQ(j["pi_exact"]["2"]["re"], "1/100");
}

TEST_F(CliTest, TextOutputByDefault) {
    auto r = run("approx " + i1());
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("s: 7"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
    auto gamma = run_json("approx " + i1("0.3"), 3);
    EXPECT_EQ(gamma["error"], "gamma-not-greater-than-one");
    EXPECT_EQ(run("approx " + i1("0.3") + " --force").code, 0);
    auto limit = run_json("--limit 1 oracle " + i1(), 5);
    EXPECT_TRUE(limit.contains("error"));
    EXPECT_EQ(run("hamming " + file("a.txt", wcount::testing::instance_text(1, 2, {{1, 1, 1}, {1, 2, -1}}, {1, 1}, "0.1")) +
                  " -y 1 0 --rhs 0")
                  .code,
              4);
    EXPECT_EQ(run("approx " + (dir_ / "missing.txt").string()).code, 2);
    EXPECT_EQ(run("no-such-command").code, 2);
}

TEST_F(CliTest, CodeCommands) {
    auto code = file("code.txt", wcount::testing::instance_text(1, 2, {{1, 1, 1}, {1, 2, 2}}, {}, "0.1", "modular 3"));
    auto j = run_json("code-weight " + code);
    EXPECT_NEAR(j["value"]["re"].get<double>(), 1.02, 1e-15);
    EXPECT_EQ(run("macwilliams " + code).code, 0);
    auto e = run_json("enumerator " + code);
    EXPECT_EQ(e["rank"], 1);
}

TEST_F(CliTest, ReductionsMatchBruteForce) {
    auto k3 = file("k3.txt", "vertices 3\n1 2\n2 3\n1 3\n");
    auto edge = file("edge.txt", "vertices 2\n1 2\n");
    auto h = run_json("hom " + edge + " " + k3 + " --anchor 1 --target 3 --phi 3 1 --omega 0.02 --brute");
    EXPECT_NEAR(h["value"]["re"].get<double>(), 1.0004, 1e-6);
    auto ind = run_json("indep " + file("c4.txt", "vertices 4\n1 2\n2 3\n3 4\n4 1\n") + " --omega 0.02 --brute");
    double lambda = std::pow(0.02, 4);
    EXPECT_NEAR(ind["value"]["re"].get<double>(), 1 + 4 * lambda + 2 * lambda * lambda, 1e-9);
}

TEST_F(CliTest, GeneratorIsDeterministic) {
    auto a = run("gen --kind instance --seed 5");
    auto b = run("gen --kind instance --seed 5");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("WCOUNT v1", 0), 0u);
}

}  // namespace
