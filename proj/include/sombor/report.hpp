#pragma once

/**
 * @file report.hpp
 * @brief CSV / JSON serialization of verification results.
 *
 * Every report starts with a single header line holding the generation
 * timestamp; everything after that line is a pure function of the results,
 * so two runs of the same sweep differ only in that first line.
 * Per-case timings are written only when requested.
 */

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sombor/verify.hpp"

namespace sombor {

inline constexpr const char* kCsvHeader =
    "n,ring,kind,family,variant,alpha,beta,gamma,edges,closed_exact,oracle_exact,match,micros";

struct ReportOptions {
  std::string generated_at;  // ISO-8601 UTC; empty means "now"
  bool timing = false;
};

/// "2026-10-16T20:10:00Z"
std::string utc_timestamp();

void write_csv(std::ostream& out, const SweepReport& report, const ReportOptions& options = {});
void write_json(std::ostream& out, const SweepReport& report, std::span<const ErrataEntry> errata,
                const ReportOptions& options = {});

nlohmann::ordered_json to_json(const CaseResult& c, bool timing = false);
nlohmann::ordered_json to_json(const ErrataEntry& e);
nlohmann::ordered_json to_json(const SweepSummary& s);
nlohmann::ordered_json to_json(const StructureReport& s);
nlohmann::ordered_json to_json(const IdentityEntry& e);
nlohmann::ordered_json to_json(const EdgePartition& p);

/// Writes `json` with the timestamp as the first member, one member per line.
void write_json_document(std::ostream& out, nlohmann::ordered_json body, const ReportOptions& options = {});

}  // namespace sombor
