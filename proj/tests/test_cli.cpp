#include "mckaykit/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  nlohmann::json out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mckaykit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = mckaykit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  nlohmann::json j;
  if (!out.str().empty() && out.str()[0] == '{') j = nlohmann::json::parse(out.str());
  return {code, j, err.str()};
}

std::string raw(std::vector<std::string> args) {
  args.insert(args.begin(), "mckaykit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  mckaykit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

}  // namespace

TEST(Cli, Examples) {
  auto g = run({"grcenter", "cyclic:2"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out["poincare"], nlohmann::json({1, 0, 1}));
  auto e = run({"exponents", "weyl:A2"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out["exponents"], nlohmann::json({1, 2}));
  auto r = run({"reflections", "weyl:B2"});
  EXPECT_EQ(r.out["count"], 2);
  EXPECT_EQ(run({"orbifold-poincare", "cyclic:3*cyclic:2"}).out["poincare"], nlohmann::json({1, 0, 3, 0, 2}));
  auto m = run({"molien", "cyclic:2", "--degree", "4"});
  EXPECT_EQ(m.out["coefficients"], nlohmann::json({"1", "0", "3", "0", "5"}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"classes", "cyclic:x"}).code, 2);
  EXPECT_EQ(run({"classes", "weyl:G3"}).code, 2);
  EXPECT_EQ(run({"hp", "cyclic:2", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"exponents", "weyl:E8"}).code, 3);
  EXPECT_EQ(run({"classes", "cyclic:100", "--cap", "50"}).code, 3);
  EXPECT_EQ(run({"verify", "lemma-easy", "--max-order", "100"}).code, 0);
}

TEST(Cli, HpAndMcExtend) {
  auto h = run({"hp", "cyclic:2", "--k", "2", "--window", "8"});
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(h.out["k"], 2);
  EXPECT_EQ(h.out["window"], 8);
  EXPECT_EQ(h.out["certified"], nlohmann::json::parse(R"([{"m":-4,"dim":1}])"));
  EXPECT_TRUE(h.out["uncertified"].is_array());
  EXPECT_EQ(run({"hp", "cyclic:3", "--k", "1", "--window", "8"}).out["certified"], nlohmann::json::array());
  auto x = run({"mc-extend", "cyclic:3", "--window", "10"});
  EXPECT_EQ(x.code, 0);
  EXPECT_EQ(x.out["obstructed"], false);
  EXPECT_EQ(x.out["basis"].size(), 2u);
}

TEST(Cli, VerifySuites) {
  EXPECT_EQ(run({"verify", "gerstenhaber", "--seed", "7"}).out["pass"], true);
  EXPECT_EQ(run({"verify", "schouten", "--seed", "3"}).out["pass"], true);
  EXPECT_EQ(run({"verify", "kunneth", "--groups", "cyclic:2,cyclic:3"}).out["pass"], true);
  auto d = run({"verify", "hp-duval", "--type", "A1", "--window", "8"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out["data"]["dims"], nlohmann::json({0, 1}));
  EXPECT_EQ(run({"verify", "hp-duval", "--type", "D4", "--window", "16"}).out["data"]["dims"], nlohmann::json({0, 4}));
  EXPECT_EQ(run({"verify", "kunneth", "--groups", "cyclic:2"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& a : {std::vector<std::string>{"grcenter", "weyl:B2"},
                                            std::vector<std::string>{"verify", "gerstenhaber", "--seed", "5"},
                                            std::vector<std::string>{"catalog", "list"}})
    EXPECT_EQ(raw(a), raw(a));
}

TEST(Cli, MatrixFile) {
  // cyclic:3 written out by hand: diag(zeta_3, zeta_3^2) with J = [[0,1],[-1,0]]
  std::string path = ::testing::TempDir() + "mckaykit_z3.json";
  std::ofstream(path) << R"({"J": [[0, 1], [-1, 0]], "gens": [[[[[1, 3, 1]], 0], [0, [[1, 3, 2]]]]]})";
  auto r = run({"reflections", "matrix-file:" + path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out["count"], 2);
  std::ofstream(path) << R"({"J": [[0, 1], [-1, 0]], "gens": [[[2, 0], [0, 1]]]})";
  EXPECT_EQ(run({"classes", "matrix-file:" + path}).code, 2);
  std::remove(path.c_str());
}
