#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sombor::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string without_first_line(const std::string& s) { return s.substr(s.find('\n') + 1); }

}  // namespace

TEST(Cli, ComputeZ15Total) {
  const auto r = run({"compute", "--ring", "zn", "--n", "15", "--graph", "total", "--exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("218*sqrt(2) + 16*sqrt(85)"), std::string::npos);
  EXPECT_NE(r.out.find("alpha=13 beta=16 gamma=20"), std::string::npos);
}

TEST(Cli, ComputeJson) {
  const auto r = run({"compute", "--ring", "zn", "--n", "15", "--graph", "unit", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["oracle"]["exact"], "120*sqrt(2) + 40*sqrt(113)");
  EXPECT_EQ(j["partition_oracle"]["beta"], 40);
  EXPECT_EQ(j["match"], true);
}

TEST(Cli, PrintedLocalFormulaWarns) {
  const auto r = run({"compute", "--ring", "zn", "--n", "9", "--graph", "unit", "--mode", "closed", "--variant",
                      "printed"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("54*sqrt(5)"), std::string::npos);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, FormulaSelection) {
  auto r = run({"compute", "--ring", "zn", "--n", "9", "--graph", "unit", "--formula", "so_unit_prime_power"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("so_unit_prime_power"), std::string::npos);
  r = run({"compute", "--ring", "zn", "--n", "9", "--graph", "unit", "--formula", "so_unit_pq"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, TruncatedPolyRing) {
  const auto r = run({"compute", "--ring", "fpxk", "--p", "3", "--k", "2", "--graph", "unit", "--float"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("F_3[x]/(x^2)"), std::string::npos);
}

TEST(Cli, OffFamily) { EXPECT_EQ(run({"compute", "--ring", "zn", "--n", "105", "--mode", "closed"}).code, 3); }

TEST(Cli, OracleOnlyOffFamilyIsFine) {
  EXPECT_EQ(run({"compute", "--ring", "zn", "--n", "105", "--mode", "oracle"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"compute", "--ring", "zn"}).code, 2);
  EXPECT_EQ(run({"compute", "--ring", "zn", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"compute", "--ring", "zppow", "--p", "4", "--alpha", "2"}).code, 2);
  EXPECT_EQ(run({"compute", "--ring", "qq", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"sweep", "--family", "p2q", "--max-n", "10"}).code, 2);
  EXPECT_EQ(run({"compute", "--ring", "zn", "--n", "200", "--ceiling", "100"}).code, 2);
}

TEST(Cli, IoError) {
  EXPECT_EQ(run({"sweep", "--family", "pq", "--max-n", "20", "--out", "/nonexistent-dir/x.csv"}).code, 4);
}

TEST(Cli, SweepCsvWorkersAgree) {
  const auto a = run({"sweep", "--family", "all", "--max-n", "80", "--format", "csv", "--workers", "1"});
  const auto b = run({"sweep", "--family", "all", "--max-n", "80", "--format", "csv", "--workers", "8"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(without_first_line(a.out), without_first_line(b.out));
}

TEST(Cli, SweepJsonHasErrata) {
  const auto r = run({"sweep", "--family", "p2q", "--max-n", "200", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("generated_at"));
  EXPECT_TRUE(j["summary"]["required_ok"].get<bool>());
  bool found = false;
  for (const auto& e : j["errata"]) found |= e["formula"] == "so_unit_p2q" && e["counterexample"] == "Z_45 unit";
  EXPECT_TRUE(found);
}

TEST(Cli, SweepToFile) {
  const auto path = std::filesystem::temp_directory_path() / "sombor_cli_sweep.csv";
  const auto r = run({"sweep", "--family", "even", "--max-n", "12", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string first, header;
  std::getline(in, first);
  std::getline(in, header);
  EXPECT_TRUE(first.starts_with("# generated_at="));
  EXPECT_TRUE(header.starts_with("n,ring,"));
  std::filesystem::remove(path);
}

TEST(Cli, VerifyAndStructureAndIdentity) {
  EXPECT_EQ(run({"verify", "--ring", "zn", "--n", "45", "--graph", "both"}).code, 0);
  EXPECT_EQ(run({"structure", "--max-n", "60"}).code, 0);
  const auto id = run({"identity", "--max-n", "20", "--circulant-max-n", "20", "--format", "json"});
  ASSERT_EQ(id.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(id.out).contains("generated_at"));
}

TEST(Cli, DumpGraph) {
  const auto r = run({"compute", "--ring", "zn", "--n", "4", "--graph", "unit", "--mode", "oracle", "--dump-graph", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p edge 4 4"), std::string::npos);
}

TEST(Cli, ComputeZ2IsZero) {
  const auto r = run({"compute", "--ring", "zn", "--n", "2", "--graph", "total"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("oracle: 0\n"), std::string::npos);
}

TEST(Cli, Partition) {
  auto r = run({"partition", "--ring", "zn", "--n", "15", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["partition_oracle"]["gamma"], 20);
  EXPECT_EQ(j["match"], true);

  r = run({"partition", "--ring", "zn", "--n", "45", "--graph", "unit", "--variant", "printed"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("edges=1584"), std::string::npos);
  EXPECT_NE(r.err.find("warning"), std::string::npos);

  EXPECT_EQ(run({"partition", "--ring", "zn", "--n", "105", "--mode", "closed"}).code, 3);
  EXPECT_EQ(run({"partition", "--ring", "zn", "--n", "105", "--mode", "oracle"}).code, 0);
}
