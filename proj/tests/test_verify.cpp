#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "oracle.hpp"
#include "sombor/error.hpp"
#include "sombor/radical_text.hpp"
#include "sombor/report.hpp"
#include "sombor/verify.hpp"

using namespace sombor;

namespace {

const VariantOutcome* find(const CaseResult& c, const std::string& formula, const std::string& variant) {
  for (const auto& v : c.variants)
    if (v.formula == formula && v.variant == variant) return &v;
  return nullptr;
}

std::string body_without_stamp(const std::string& text) { return text.substr(text.find('\n') + 1); }

}  // namespace

TEST(VerifyCase, Z15Total) {
  const auto c = verify_case(15, GraphKind::Total);
  EXPECT_EQ(c.family, "pq");
  EXPECT_TRUE(c.handshake_ok);
  EXPECT_TRUE(c.degrees_match());
  EXPECT_EQ(c.oracle_partition, EdgePartition::from_total(13, 16, 49));
  EXPECT_EQ(render_radical(c.oracle), "218*sqrt(2) + 16*sqrt(85)");
  const auto* v = find(c, "so_total_pq", "unique");
  ASSERT_NE(v, nullptr);
  EXPECT_TRUE(v->match());
  EXPECT_TRUE(c.required_ok());
}

TEST(VerifyCase, Z45UnitPrintedEdgeCount) {
  const auto c = verify_case(45, GraphKind::Unit);
  EXPECT_EQ(c.oracle_partition.total, 528);
  const auto* printed = find(c, "so_unit_p2q", "printed");
  const auto* corrected = find(c, "so_unit_p2q", "corrected");
  ASSERT_NE(printed, nullptr);
  ASSERT_NE(corrected, nullptr);
  EXPECT_FALSE(printed->partition_match);
  EXPECT_TRUE(corrected->match());
  EXPECT_TRUE(c.required_ok());
}

TEST(VerifyCase, PrimePowerZnCarriesLocalFormulasFirst) {
  const auto set = closed_forms_for(FiniteRing::integers_mod(9), GraphKind::Unit);
  ASSERT_FALSE(set.values.empty());
  EXPECT_EQ(set.values.front().formula, "so_unit_local");
  EXPECT_EQ(set.family, "pp");
  const bool has_pp = std::any_of(set.values.begin(), set.values.end(),
                                  [](const auto& v) { return v.formula == "so_unit_prime_power"; });
  EXPECT_TRUE(has_pp);
}

TEST(VerifyCase, OtherFamilyIsOracleOnly) {
  const auto c = verify_case(105, GraphKind::Total);
  EXPECT_TRUE(c.oracle_only());
  EXPECT_TRUE(c.required_ok());
  EXPECT_EQ(c.family, "other");
}

TEST(VerifyCase, TruncatedPoly) {
  const auto c = verify_case(FiniteRing::truncated_poly(3, 2), GraphKind::Unit);
  EXPECT_EQ(c.family, "local");
  EXPECT_NE(find(c, "so_unit_local", "corrected"), nullptr);
  EXPECT_TRUE(c.required_ok());
}

TEST(VerifyCase, Ceiling) {
  EXPECT_THROW(verify_case(100, GraphKind::Total, VerifyOptions{50}), CeilingExceeded);
}

TEST(Sweep, RingsAreOrderedAndFiltered) {
  SweepOptions o;
  o.family = SweepFamily::PQ;
  o.max_n = 60;
  std::vector<std::uint64_t> orders;
  for (const auto& r : sweep_rings(o)) orders.push_back(r.order());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{15, 21, 33, 35, 39, 51, 55, 57}));

  o.family = SweepFamily::P2Q;
  o.max_n = 10;
  EXPECT_THROW(sweep(o), EmptySweep);

  o.family = SweepFamily::Local;
  o.max_n = 9;
  std::vector<std::string> names;
  for (const auto& r : sweep_rings(o)) names.push_back(r.name());
  EXPECT_NE(std::find(names.begin(), names.end(), "F_3[x]/(x^2)"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "Z_8"), names.end());
}

TEST(Sweep, AllFamiliesAgreeUpTo150) {
  SweepOptions o;
  o.max_n = 150;
  const auto report = sweep(o);
  EXPECT_TRUE(report.summary.required_ok());
  EXPECT_EQ(report.summary.structural_failures, 0U);
  EXPECT_EQ(report.cases.size(), 2 * 149U);
}

TEST(Sweep, DeterministicAcrossWorkers) {
  SweepOptions o;
  o.max_n = 120;
  o.workers = 1;
  const auto one = sweep(o);
  o.workers = 8;
  const auto eight = sweep(o);
  const ReportOptions fixed{"2026-01-01T00:00:00Z", false};
  std::ostringstream a, b, c, d;
  write_csv(a, one, fixed);
  write_csv(b, eight, fixed);
  EXPECT_EQ(a.str(), b.str());
  write_json(c, one, errata_report(one.cases), fixed);
  write_json(d, eight, errata_report(eight.cases), fixed);
  EXPECT_EQ(c.str(), d.str());
}

TEST(Sweep, DefaultStampOnlyChangesFirstLine) {
  SweepOptions o;
  o.family = SweepFamily::Even;
  o.max_n = 20;
  const auto r = sweep(o);
  std::ostringstream a, b;
  write_csv(a, r);
  write_csv(b, r, ReportOptions{"x", false});
  EXPECT_TRUE(a.str().starts_with("# generated_at="));
  EXPECT_EQ(body_without_stamp(a.str()), body_without_stamp(b.str()));
}

TEST(Errata, SmallestCounterexamples) {
  SweepOptions o;
  o.max_n = 100;
  const auto report = sweep(o);
  const auto errata = errata_report(report.cases);
  std::map<std::string, ErrataEntry> by_formula;
  for (const auto& e : errata) by_formula[e.formula] = e;

  ASSERT_TRUE(by_formula.contains("so_unit_p2q"));
  EXPECT_EQ(by_formula["so_unit_p2q"].instance, "Z_45 unit");
  EXPECT_EQ(by_formula["so_unit_p2q"].quantity, "edge count");
  EXPECT_EQ(by_formula["so_unit_p2q"].oracle_value, "528");

  ASSERT_TRUE(by_formula.contains("so_unit_prime_power"));
  EXPECT_EQ(by_formula["so_unit_prime_power"].n, 3U);

  ASSERT_TRUE(by_formula.contains("so_unit_local"));
  EXPECT_EQ(by_formula["so_unit_local"].n, 5U);

  ASSERT_TRUE(by_formula.contains("unit_graph_degrees_general_ring"));
  EXPECT_EQ(by_formula["unit_graph_degrees_general_ring"].n, 3U);

  // Nothing else is wrong: every unique or corrected formula holds.
  for (const auto& e : errata) EXPECT_TRUE(by_formula.contains(e.formula));
  EXPECT_EQ(errata.size(), 4U);
}

TEST(Errata, NoneWhenEverythingMatches) {
  SweepOptions o;
  o.family = SweepFamily::Even;
  o.max_n = 40;
  EXPECT_TRUE(errata_report(sweep(o).cases).empty());
}

TEST(Structure, ZnUpTo200) {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const auto s = check_structure(FiniteRing::integers_mod(n));
    ASSERT_TRUE(s.consistent()) << n;
    ASSERT_EQ(s.zero_divisor_clique, Modulus(n).is_prime_power()) << n;
  }
}

TEST(Structure, TruncatedPolys) {
  for (auto [p, k] : {std::pair{2ULL, 4U}, {3ULL, 3U}, {5ULL, 2U}}) {
    const auto s = check_structure(FiniteRing::truncated_poly(p, k));
    EXPECT_TRUE(s.local);
    EXPECT_TRUE(s.zero_divisor_clique);
    EXPECT_TRUE(s.consistent());
  }
}

TEST(Identity, SmallSweep) {
  const auto r = identity_sweep(30, 30);
  EXPECT_TRUE(r.all_residuals_zero());
  EXPECT_TRUE(r.all_oracles_match());
  EXPECT_FALSE(r.entries.empty());
  for (const auto& e : r.entries) EXPECT_TRUE(e.oracle_checked);
}

TEST(Identity, RegularOffsets) {
  EXPECT_EQ(regular_offsets(10, 3), (std::set<std::size_t>{1, 5}));
  EXPECT_EQ(regular_offsets(10, 4), (std::set<std::size_t>{1, 2}));
}

TEST(Report, CsvColumns) {
  SweepOptions o;
  o.family = SweepFamily::PQ;
  o.max_n = 15;
  o.kinds = {GraphKind::Total};
  std::ostringstream s;
  write_csv(s, sweep(o), ReportOptions{"t", false});
  std::istringstream in(s.str());
  std::string stamp, header, row;
  std::getline(in, stamp);
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(stamp, "# generated_at=t");
  EXPECT_EQ(header, kCsvHeader);
  EXPECT_EQ(row, "15,Z_15,total,pq,unique,13,16,20,49,218*sqrt(2) + 16*sqrt(85),218*sqrt(2) + 16*sqrt(85),true,");
}

TEST(Report, JsonCase) {
  const auto j = to_json(verify_case(9, GraphKind::Unit));
  EXPECT_EQ(j["ring"], "Z_9");
  EXPECT_EQ(j["variants"][0]["formula"], "so_unit_local");
  EXPECT_FALSE(j.contains("micros"));
  EXPECT_TRUE(to_json(verify_case(9, GraphKind::Unit), true).contains("micros"));
}
