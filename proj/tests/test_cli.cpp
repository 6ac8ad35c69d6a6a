#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "coinv/report.hpp"

using namespace coinv;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::string& args) {
    const std::string errfile = ::testing::TempDir() + "coinv_stderr.txt";
    const std::string cmd = std::string(COINV_CLI_PATH) + " " + args + " 2>" + errfile;
    FILE* pipe = popen(cmd.c_str(), "r");
    Run r{-1, "", ""};
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (FILE* f = fopen(errfile.c_str(), "r")) {
        while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.err.append(buf.data(), n);
        fclose(f);
    }
    return r;
}

}  // namespace

TEST(CliTest, GroebnerBasisOfV4) {
    auto r = run("--p 5 --rep V4 gb");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "X_1\nX_2^2\nX_3^2*X_2\nX_3^4\nX_4^5\n");
    EXPECT_NE(r.err.find("matches"), std::string::npos);
}

TEST(CliTest, TrivialRepresentation) {
    auto r = run("--p 3 --rep V1 gb");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "X_1\n");
    EXPECT_NE(r.err.find("not covered by the paper"), std::string::npos);
}

TEST(CliTest, Series) {
    auto r = run("--p 3 --rep V3 series");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 2 2 1\n");
    r = run("--p 3 --rep V2+V3 series");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 3 5 5 3 1\n");
    // Summands are reordered, so V3+V2 is the same module.
    EXPECT_EQ(run("--p 3 --rep V3+V2 series").out, r.out);
}

TEST(CliTest, BasisAndPaperNames) {
    auto r = run("--p 3 --rep V2+V3 --paper-names basis");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 3), "0: ");
    EXPECT_NE(r.out.find("1: z_2 y_2 y_1"), std::string::npos);
    auto g = run("--p 3 --rep V2+V3 --paper-names gb");
    EXPECT_EQ(g.out, "X_1\nX_2\nY_2^2\nY_1^3\nZ_2^3\n");
}

TEST(CliTest, Decompose) {
    auto r = run("--p 5 --rep V5 decompose");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0: V1\n1: V4\n2: 2V4\n3: 2V4+2V1\n4: 2V4+2V1\n5: V4+V3+2V1\n6: V4+2V1\n7: 2V1\n");
}

TEST(CliTest, UsageErrors) {
    auto r = run("--p 4 --rep V2 gb");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("not prime"), std::string::npos);
    r = run("--p 3 --rep V4 gb");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("n <= p"), std::string::npos);
    EXPECT_EQ(run("--p 3 --rep W2 gb").code, 2);
    EXPECT_EQ(run("--p 3 --rep 0V2 gb").code, 2);
    EXPECT_EQ(run("--p 3 --rep V2+ gb").code, 2);
    EXPECT_EQ(run("--p 3 gb").code, 2);
    EXPECT_EQ(run("--p 3 --rep V2").code, 2);
    EXPECT_EQ(run("--p 3 --rep V2 frobnicate").code, 2);
    EXPECT_EQ(run("verify bogus").code, 2);
}

TEST(CliTest, JsonRoundTrip) {
    for (const char* args : {"--p 5 --rep V5 --json decompose", "--p 3 --rep 2V2+V3 --json basis", "--p 7 --rep V4 --json gb"}) {
        auto r = run(args);
        ASSERT_EQ(r.code, 0) << args;
        auto j = nlohmann::json::parse(r.out);
        for (const char* key : {"p", "rep", "gb", "hilbert_series", "top_degree", "decomposition", "checks"})
            EXPECT_TRUE(j.contains(key)) << key;
        Report rep = report_from_json(j);
        EXPECT_EQ(to_json(rep), j);
        EXPECT_TRUE(same_report(report_from_json(to_json(rep)), rep));
    }
    auto j = nlohmann::json::parse(run("--p 5 --rep V5 --json decompose").out);
    EXPECT_EQ(j["decomposition"]["5"]["3"], 1);
    EXPECT_EQ(j["top_degree"], 7);
    EXPECT_EQ(j["hilbert_series"], (std::vector<int>{1, 4, 8, 10, 10, 9, 6, 2}));
}

TEST(CliTest, VerifyNorm) {
    auto r = run("verify norm");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS norm-expansion p=13"), std::string::npos);
    EXPECT_NE(r.out.find("5/5 checks passed"), std::string::npos);
}

TEST(ParseRepTest, Grammar) {
    EXPECT_EQ(parse_rep_expr("V4"), std::vector<unsigned>{4});
    EXPECT_EQ(parse_rep_expr("2V2+V3"), (std::vector<unsigned>{2, 2, 3}));
    EXPECT_EQ(parse_rep_expr(" 3V3 "), (std::vector<unsigned>{3, 3, 3}));
    EXPECT_THROW(parse_rep_expr(""), std::invalid_argument);
    EXPECT_THROW(parse_rep_expr("V"), std::invalid_argument);
    EXPECT_THROW(parse_rep_expr("V2++V3"), std::invalid_argument);
    EXPECT_THROW(parse_rep_expr("40V2"), std::invalid_argument);
}
