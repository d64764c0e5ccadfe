#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(HCCOURANT_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& f) { return std::string(DATA_DIR) + "/" + f; }

nlohmann::json run_json(const std::string& args, int expect_code) {
  const CliRun r = run(args + " --format json");
  EXPECT_EQ(r.code, expect_code) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, Validate) {
  const CliRun r = run("validate " + data("v1_2.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("associative: true"), std::string::npos);
  EXPECT_NE(r.out.find("unital: true"), std::string::npos);
}

TEST(Cli, ValidateRejectsNonAssociative) {
  auto j = nlohmann::json::parse(run("validate " + data("v1_2.json") + " --format json").out);
  const std::string path = testing::TempDir() + "bad_alg.json";
  const std::string body = R"({"name":"bad","dimension":3,"basis":["1","a","b"],"unit":["1","0","0"],
    "structure":[[0,0,["1","0","0"]],[0,1,["0","1","0"]],[0,2,["0","0","1"]],[1,0,["0","1","0"]],[2,0,["0","0","1"]],
    [1,1,["0","0","1"]],[2,1,["0","1","0"]]]})";
  FILE* f = fopen(path.c_str(), "w");
  fputs(body.c_str(), f);
  fclose(f);
  const auto r = run_json("validate " + path, 1);
  EXPECT_EQ(r["associative"], false);
  EXPECT_EQ(j["schema"], "hccourant/1");
}

TEST(Cli, Omni) {
  const CliRun r = run("omni --dim 2");
  EXPECT_EQ(r.code, 0);
  const auto j = run_json("omni --dim 2", 0);
  EXPECT_EQ(j["dim_E"], 7);
  EXPECT_EQ(j["dim_J"], 1);
  EXPECT_EQ(j["schema"], "hccourant/1");
  EXPECT_EQ(j["command"], "omni");
  EXPECT_EQ(j["seed"], 42);
}

TEST(Cli, DiracCheckNonJacobi) {
  const auto j = run_json("dirac-check --algebra " + data("v1_3.json") + " --bracket " + data("bad_jacobi.json"), 1);
  EXPECT_EQ(j["verdict"]["dirac"], false);
  ASSERT_TRUE(j["verdict"].contains("counterexample"));
  EXPECT_EQ(j["verdict"]["counterexample"]["pair"].size(), 2u);
}

TEST(Cli, DiracCheckSo3) {
  const auto j = run_json("dirac-check --algebra " + data("v1_3.json") + " --bracket " + data("so3.json"), 0);
  EXPECT_EQ(j["verdict"]["dirac"], true);
}

TEST(Cli, DegenerateEpsilonIsInputError) {
  const auto j = run_json("dirac-check --algebra " + data("q.json") + " --submodule " + data("dual2_h1_summand.json"), 2);
  EXPECT_EQ(j["status"], "error");
}

TEST(Cli, MissingFile) {
  const auto j = run_json("courant --algebra /nonexistent.json", 2);
  EXPECT_EQ(j["status"], "error");
  EXPECT_EQ(j["command"], "courant");
}

TEST(Cli, GuardError) {
  const auto j = run_json("omni --dim 5", 2);
  EXPECT_NE(j["error"].get<std::string>().find("--guard"), std::string::npos);
  run_json("omni --dim 5 --guard 5", 0);
}

TEST(Cli, BracketForWrongAlgebra) {
  run_json("poisson-graph --algebra " + data("v1_2.json") + " --bracket " + data("so3.json"), 2);
}

TEST(Cli, UnknownSubcommand) { EXPECT_EQ(run("frobnicate").code, 2); }

TEST(Cli, Homology) {
  const auto j = run_json("homology --algebra " + data("dual2.json") + " --degree 1", 0);
  ASSERT_EQ(j["groups"].size(), 2u);
  EXPECT_EQ(j["groups"][1]["dim"], 1);
}

TEST(Cli, TwoForm) {
  const auto j = run_json("two-form --algebra " + data("v1_2.json") + " --omega " + data("v1_2_omega.json"), 0);
  EXPECT_EQ(j["verdict"]["dirac"], true);
  const auto s = run_json("two-form --algebra " + data("dual2.json"), 0);
  EXPECT_EQ(s["search"]["witness"], "none found");
  EXPECT_EQ(s["search"]["zero_form_dirac"], true);
}

TEST(Cli, MoritaTransport) {
  const auto j = run_json("morita --algebra " + data("dual2.json") + " --r 2 --transport " + data("dual2_h1_summand.json"), 0);
  EXPECT_EQ(j["transported_verdict"]["dirac"], true);
}

TEST(Cli, OutFile) {
  const std::string path = testing::TempDir() + "kernel_out.json";
  EXPECT_EQ(run("kernel --algebra v1_2 --format json --out " + path).code, 0);
  FILE* f = fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::string s;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) s.append(buf.data(), n);
  fclose(f);
  EXPECT_EQ(nlohmann::json::parse(s)["kernel"]["dim_J"], 1);
}
