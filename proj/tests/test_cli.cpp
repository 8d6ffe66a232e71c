#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& binary, const std::string& args, bool merge_stderr = false) {
  const std::string cmd = "'" + binary + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

CliResult nclp(const std::string& args, bool merge_stderr = false) { return run(NCLP_CLI_PATH, args, merge_stderr); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    out.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST(Cli, EnumerateCounts) {
  for (const auto& [kind, n, count] : std::vector<std::tuple<std::string, int, int>>{
           {"nc", 3, 5}, {"ncl", 4, 22}, {"bicolor", 3, 7}, {"trees", 4, 5}, {"ncs", 3, 5}, {"ncls", 3, 7}}) {
    const CliResult r = nclp("enumerate " + kind + " " + std::to_string(n));
    ASSERT_EQ(r.code, 0) << kind;
    const auto ls = lines(r.out);
    ASSERT_EQ(static_cast<int>(ls.size()), count + 1) << kind;
    EXPECT_EQ(json::parse(ls.back()), json({{"count", count}}));
    for (int i = 0; i < count; ++i) EXPECT_NO_THROW(json::parse(ls[i]));
  }
}

TEST(Cli, EnumerateLimit) {
  const CliResult r = nclp("enumerate ncl 10", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("limit is 9"), std::string::npos);
  EXPECT_EQ(nclp("--limit ncl=10 enumerate ncl 10").code, 5);
  EXPECT_EQ(nclp("--limit nc=3 enumerate nc 4").code, 2);
  EXPECT_EQ(run("/usr/bin/env", std::string("NCL_LIMITS=nc=3 '") + NCLP_CLI_PATH + "' enumerate nc 4").code, 2);
}

TEST(Cli, EnumerationIsStreamedThenRoundtrips) {
  const CliResult r = nclp("enumerate ncl 3");
  for (const auto& line : lines(r.out)) {
    const json j = json::parse(line);
    if (j.contains("count")) continue;
    const CliResult back = nclp("biject theta-inv '" + nclp("biject theta '" + line + "'").out + "'");
    if (back.code == 0) EXPECT_EQ(json::parse(back.out), j);
  }
}

TEST(Cli, Transforms) {
  EXPECT_EQ(nclp(R"(transform m2t '["1","2","5","14","42"]')").out, "[\"1\",\"1\",\"0\",\"0\",\"0\"]\n");
  EXPECT_EQ(nclp(R"(transform m2k '["1","2","5"]')").out, "[\"1\",\"1\",\"1\"]\n");
  EXPECT_EQ(nclp(R"(transform m2t '["1","1","1"]')").out, "[\"1\",\"0\",\"0\"]\n");
  EXPECT_EQ(nclp(R"(transform k2m '["1","1","1"]')").out, "[\"1\",\"2\",\"5\"]\n");
  EXPECT_EQ(nclp(R"(transform t2m '{"order":3,"coeffs":["1","1","0"]}')").out, "[\"1\",\"2\",\"5\"]\n");
  EXPECT_EQ(nclp(R"(transform m2t '["0","1"]')").code, 3);
  EXPECT_EQ(nclp(R"(transform t2m '["0","1"]')").code, 3);
  EXPECT_EQ(nclp(R"(transform m2t '["1","x"]')").code, 5);
  EXPECT_EQ(nclp(R"(transform m2t '[1,')").code, 5);
  EXPECT_EQ(nclp(R"(transform bogus '["1"]')").code, 5);
}

TEST(Cli, InputFromFileAndStdin) {
  const std::string path = testing::TempDir() + "nclp_series.json";
  std::ofstream(path) << R"(["1","2","5"])";
  EXPECT_EQ(nclp("transform m2k " + path).out, "[\"1\",\"1\",\"1\"]\n");
  EXPECT_EQ(run("/bin/sh", std::string("-c \"echo '[\\\"1\\\",\\\"2\\\",\\\"5\\\"]' | '") + NCLP_CLI_PATH +
                               "' transform m2k -\"")
                .out,
            "[\"1\",\"1\",\"1\"]\n");
  EXPECT_EQ(nclp("transform m2k /nonexistent/file.json").code, 5);
}

TEST(Cli, Bijections) {
  const CliResult chain = nclp(R"(biject theta '{"n":3,"blocks":[[1,2],[2,3]]}')");
  ASSERT_EQ(chain.code, 0);
  EXPECT_EQ(json::parse(chain.out),
            json::parse(R"({"children":[{"tree":{"children":[{"tree":{"children":[]}}]}}]})"));
  const CliResult back = nclp("biject theta-inv '" + chain.out + "'");
  EXPECT_EQ(json::parse(back.out), json::parse(R"({"n":3,"blocks":[[1,2],[2,3]]})"));

  const CliResult lam = nclp(R"(biject lambda '{"n":6,"blocks":[[1,3,5],[2],[4],[6]]}')");
  ASSERT_EQ(lam.code, 0);
  EXPECT_EQ(json::parse(lam.out), json::parse(R"({"children":[{"color":1,"tree":{"children":[]}},
                                                               {"color":1,"tree":{"children":[]}}]})"));
  EXPECT_EQ(json::parse(nclp("biject lambda-inv '" + lam.out + "'").out),
            json::parse(R"({"n":6,"blocks":[[1,3,5],[2],[4],[6]]})"));

  EXPECT_EQ(nclp(R"(biject theta '{"n":3,"blocks":[[1,2],[3]]}')").code, 4);
  EXPECT_EQ(nclp(R"(biject lambda '{"n":4,"blocks":[[1,2],[3,4]]}')").code, 4);
  EXPECT_EQ(nclp(R"(biject theta '{"n":4,"blocks":[[1,3],[2,4]]}')").code, 5);
}

TEST(Cli, Render) {
  EXPECT_EQ(nclp(R"(render '{"n":3,"blocks":[[1],[2],[3]]}')").out, "1   2   3\n");
  EXPECT_EQ(nclp(R"(render '{"children":[{"color":1,"tree":{"children":[{"color":0,"tree":{"children":[]}}]}}]}')").out,
            "o\n|\no\n:\no\n");
  EXPECT_EQ(nclp(R"(render '{"children":[{"tree":{"children":[]}}]}')").out, "o\n|\no\n");
}

TEST(Cli, Convolve) {
  EXPECT_EQ(nclp(R"(convolve product '["1","1","0"]' '["2","1/2","-1/8"]')").out, "[\"2\",\"5/2\",\"3/8\"]\n");
  const CliResult v = nclp(R"(convolve verify '["1","2","5","14","42"]' '["2","5","14","42","132"]' --order 5)");
  ASSERT_EQ(v.code, 0);
  const json report = json::parse(v.out);
  EXPECT_EQ(report.at("pass"), true);
  EXPECT_EQ(report.at("t_via_convolution")[1], "5/2");
  EXPECT_EQ(nclp(R"(convolve verify '["0","1"]' '["1","1"]')").code, 3);
  EXPECT_EQ(nclp(R"(convolve product '["1"]' '["1","2"]')").code, 5);
}

TEST(Cli, VerifyDeterministicAndGreen) {
  const CliResult a = nclp("verify theorem --order 5 --seed 7");
  const CliResult b = nclp("verify theorem --order 5 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out).at("pass"), true);
  EXPECT_NE(a.out, nclp("verify theorem --order 5 --seed 8").out);
  EXPECT_EQ(nclp("verify counts").code, 0);
  EXPECT_EQ(nclp("verify theorem --order 7").code, 2);
  EXPECT_EQ(nclp("verify nosuch").code, 5);
}

TEST(Cli, VerifyAllGreen) {
  const CliResult r = nclp("verify all");
  EXPECT_EQ(r.code, 0);
  const json report = json::parse(r.out);
  EXPECT_EQ(report.at("pass"), true);
  EXPECT_EQ(report.at("entries_failed"), 0);
}

TEST(Cli, CorruptedKrewerasFailsWithWitness) {
  const CliResult r = run(NCLP_CORRUPT_CLI_PATH, "verify all");
  EXPECT_EQ(r.code, 1);
  const json report = json::parse(r.out);
  EXPECT_EQ(report.at("pass"), false);
  bool witnessed = false;
  for (const auto& e : report.at("entries")) {
    if (e.at("pass") == false && e.contains("witness") && e.at("witness").contains("gamma")) witnessed = true;
  }
  EXPECT_TRUE(witnessed);
}

TEST(Cli, BadUsage) {
  EXPECT_EQ(nclp("").code, 5);
  EXPECT_EQ(nclp("enumerate").code, 5);
  EXPECT_EQ(nclp("enumerate widgets 3").code, 5);
  EXPECT_EQ(nclp("--format xml enumerate nc 3").code, 5);
}
