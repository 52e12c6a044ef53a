#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polargrass/cli.hpp"

namespace fs = std::filesystem;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = polargrass::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "polargrass_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST(Cli, BuildWritesGeometry) {
  auto path = scratch("b31.json");
  auto r = run({"build", "--type", "B", "--n", "3", "--k", "1", "--q", "2", "--out", path.string()});
  ASSERT_EQ(r.code, polargrass::kExitOk) << r.err;
  auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["points"].size(), 63u);
  EXPECT_EQ(j["lines"].size(), 315u);
}

TEST(Cli, BuildIsReproducible) {
  auto a = scratch("a32_a.json"), b = scratch("a32_b.json");
  ASSERT_EQ(run({"build", "--type", "A", "--n", "3", "--k", "2", "--q", "2", "--out", a.string()}).code, 0);
  ASSERT_EQ(run({"build", "--type", "A", "--n", "3", "--k", "2", "--q", "2", "--out", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  auto dot = run({"export", "--in", a.string(), "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("graph"), std::string::npos);
}

TEST(Cli, ApartmentDiagram) {
  auto path = scratch("d53_diagram.json");
  auto r = run({"apartment", "--type", "D", "--n", "5", "--k", "3", "--q", "2", "--diagram", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("sizes\t1,12,12,3,24,12,3,12,1"), std::string::npos) << r.out;
  auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["classes"], nlohmann::json::parse(
      R"({"0": 1, "1": 12, "2g": 12, "2q": 3, "2s": 24, "3h": 12, "3q": 3, "3hh": 12, "4": 1})"));
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  auto one = run({"symps", "--type", "B", "--n", "3", "--k", "2", "--q", "2", "--threads", "1"});
  auto two = run({"symps", "--type", "B", "--n", "3", "--k", "2", "--q", "2", "--threads", "3"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, two.out);
}

TEST(Cli, VerifyDualPolar) {
  auto r = run({"verify", "--lemma", "dual-polar-a32", "--type", "C", "--n", "3", "--q", "3"});
  EXPECT_EQ(r.code, polargrass::kExitOk) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
}

TEST(Cli, VerifyListsEveryLemma) {
  auto r = run({"verify", "--list"});
  ASSERT_EQ(r.code, 0);
  for (const char* name :
       {"subspace-distances", "residues-convex", "parabolic-type", "up-or-down", "sing-in-grass", "generation",
        "decomposition", "diameter", "sing-in-sing", "sing-in-proper", "points-distance-two", "points-in-symps",
        "frame-generation", "polar-j2", "dual-polar-a32", "a32-nonorthogonal", "a32-orthogonal", "regular-j2", "dk2",
        "a32-in-dnn2", "distance-classes", "distance-diagram", "no-a53", "parabolic-dnn2",
        "dual-polar-correspondence", "main-theorem", "criterion-9"})
    EXPECT_NE(r.out.find(std::string(name) + "\t"), std::string::npos) << name;
}

TEST(Cli, VerificationFailureExitsOne) {
  fs::path dir = scratch("golden");
  fs::create_directories(dir);
  fs::path file = dir / "d53_distance_diagram.json";
  std::ofstream(file) << R"({"labels": ["0"]})";
  auto r = run({"verify", "--lemma", "distance-diagram", "--golden", dir.string()});
  EXPECT_EQ(r.code, polargrass::kExitUsage) << r.out << r.err;
  std::ofstream(file) << R"({"labels": ["0"], "classes": {"0": 2}, "edges": []})";
  r = run({"verify", "--lemma", "distance-diagram", "--golden", dir.string()});
  EXPECT_EQ(r.code, polargrass::kExitVerificationFailed) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("FAIL", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, polargrass::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, polargrass::kExitUsage);
  EXPECT_EQ(run({"build", "--type", "Z", "--n", "3", "--k", "1", "--q", "2"}).code, polargrass::kExitUsage);
  EXPECT_EQ(run({"build", "--type", "B", "--n", "3", "--k", "1", "--q", "6"}).code, polargrass::kExitUsage);
  EXPECT_EQ(run({"verify", "--lemma", "no-such-lemma"}).code, polargrass::kExitUsage);
  EXPECT_EQ(run({"verify"}).code, polargrass::kExitUsage);
  auto r = run({"build", "--type", "B", "--n", "3", "--k", "1", "--q", "2", "--format", "xml"});
  EXPECT_EQ(r.code, polargrass::kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, BudgetExceededIsAnError) {
  auto r = run({"build", "--type", "A", "--n", "9", "--k", "5", "--q", "2"});
  EXPECT_EQ(r.code, polargrass::kExitUsage);
  EXPECT_NE(r.err.find("budget"), std::string::npos) << r.err;
}
