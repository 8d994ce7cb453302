#include "sombor/report.hpp"

#include <chrono>
#include <ctime>
#include <ostream>

#include "sombor/radical_text.hpp"

namespace sombor {

using nlohmann::ordered_json;

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

std::string stamp(const ReportOptions& options) {
  return options.generated_at.empty() ? utc_timestamp() : options.generated_at;
}

void csv_row(std::ostream& out, const CaseResult& c, const std::string& family, const std::string& variant,
             const EdgePartition& part, const std::string& closed, const std::string& match,
             const ReportOptions& options) {
  out << c.n << ',' << c.ring << ',' << to_string(c.kind) << ',' << family << ',' << variant << ',' << part.alpha
      << ',' << part.beta << ',' << part.gamma << ',' << part.total << ',' << closed << ','
      << render_radical(c.oracle) << ',' << match << ',';
  if (options.timing) out << c.elapsed.count();
  out << '\n';
}

}  // namespace

void write_csv(std::ostream& out, const SweepReport& report, const ReportOptions& options) {
  out << "# generated_at=" << stamp(options) << '\n';
  out << kCsvHeader << '\n';
  for (const auto& c : report.cases) {
    if (c.oracle_only()) {
      csv_row(out, c, c.family, "none", c.oracle_partition, "", "n/a", options);
      continue;
    }
    for (const auto& v : c.variants) {
      csv_row(out, c, v.family, v.variant, v.partition.value_or(c.oracle_partition), render_radical(v.closed),
              v.match() ? "true" : "false", options);
    }
  }
}

ordered_json to_json(const EdgePartition& p) {
  return ordered_json{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"edges", p.total}};
}

ordered_json to_json(const CaseResult& c, bool timing) {
  ordered_json j;
  j["n"] = c.n;
  j["ring"] = c.ring;
  j["kind"] = to_string(c.kind);
  j["family"] = c.family;
  j["in_hypothesis"] = c.in_hypothesis;
  j["oracle_exact"] = render_radical(c.oracle);
  j["oracle_float"] = render_float(c.oracle.to_double());
  j["partition_oracle"] = to_json(c.oracle_partition);
  j["handshake"] = c.handshake_ok;
  j["degrees_predicted"] = {{"zero_divisor", c.predicted.zero_divisor}, {"unit", c.predicted.unit}};
  if (c.observed) {
    j["degrees_observed"] = {{"zero_divisor", c.observed->zero_divisor}, {"unit", c.observed->unit}};
  } else {
    j["degrees_observed"] = nullptr;
  }
  ordered_json variants = ordered_json::array();
  for (const auto& v : c.variants) {
    ordered_json jv;
    jv["formula"] = v.formula;
    jv["family"] = v.family;
    jv["variant"] = v.variant;
    jv["closed_exact"] = render_radical(v.closed);
    jv["partition_closed"] = v.partition ? to_json(*v.partition) : ordered_json(nullptr);
    jv["value_match"] = v.value_match;
    jv["partition_match"] = v.partition_match;
    jv["match"] = v.match();
    variants.push_back(std::move(jv));
  }
  j["variants"] = std::move(variants);
  if (timing) j["micros"] = c.elapsed.count();
  return j;
}

ordered_json to_json(const ErrataEntry& e) {
  return ordered_json{{"formula", e.formula},           {"printed_expression", e.printed_expression},
                      {"counterexample", e.instance},   {"n", e.n},
                      {"quantity", e.quantity},         {"printed_value", e.printed_value},
                      {"oracle_value", e.oracle_value}};
}

ordered_json to_json(const SweepSummary& s) {
  ordered_json j;
  j["cases"] = s.cases;
  j["oracle_only"] = s.oracle_only;
  j["structural_failures"] = s.structural_failures;
  ordered_json by = ordered_json::object();
  for (const auto& [k, t] : s.by_variant) by[k] = {{"matched", t.matched}, {"mismatched", t.mismatched}};
  j["by_variant"] = std::move(by);
  j["required_ok"] = s.required_ok();
  return j;
}

ordered_json to_json(const StructureReport& s) {
  return ordered_json{{"ring", s.ring},
                      {"local", s.local},
                      {"zero_divisor_clique", s.zero_divisor_clique},
                      {"degrees_match", s.degrees_match},
                      {"complement_duality", s.complement_duality},
                      {"consistent", s.consistent()}};
}

ordered_json to_json(const IdentityEntry& e) {
  ordered_json j{{"n", e.n}, {"k", e.k}, {"residual", render_radical(e.residual)}};
  j["oracle_checked"] = e.oracle_checked;
  if (e.oracle_checked) j["oracle_match"] = e.oracle_match;
  return j;
}

void write_json_document(std::ostream& out, ordered_json body, const ReportOptions& options) {
  ordered_json doc;
  doc["generated_at"] = stamp(options);
  for (auto& [k, v] : body.items()) doc[k] = std::move(v);
  out << doc.dump(2) << '\n';
}

void write_json(std::ostream& out, const SweepReport& report, std::span<const ErrataEntry> errata,
                const ReportOptions& options) {
  ordered_json body;
  body["summary"] = to_json(report.summary);
  ordered_json cases = ordered_json::array();
  for (const auto& c : report.cases) cases.push_back(to_json(c, options.timing));
  body["cases"] = std::move(cases);
  ordered_json err = ordered_json::array();
  for (const auto& e : errata) err.push_back(to_json(e));
  body["errata"] = std::move(err);
  write_json_document(out, std::move(body), options);
}

}  // namespace sombor
