#pragma once

/**
 * @file verify.hpp
 * @brief Closed forms versus brute force, structural checks, errata.
 *
 * A case is one ring and one graph kind. verify_case builds the graph
 * explicitly, computes the Sombor index edge by edge, evaluates every
 * closed form that applies (both variants where a printed statement is
 * known to be suspect), and records exact matches. Mismatches are data,
 * never exceptions.
 */

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sombor/closed_forms.hpp"
#include "sombor/edge_partition.hpp"
#include "sombor/graph.hpp"
#include "sombor/radical.hpp"
#include "sombor/ring.hpp"

namespace sombor {

inline constexpr std::size_t kDefaultCeiling = std::size_t{1} << 14;

struct ClosedFormValue {
  std::string formula;  // closed-form function name, e.g. "so_unit_p2q"
  std::string family;   // even, pp, pq, p2q, p2q-ext or local
  std::string variant;  // "unique", "printed" or "corrected"
  RadicalSum value;
  std::optional<EdgePartition> partition;
};

/// Every closed form that applies to one ring and graph kind.
struct ClosedFormSet {
  std::string family;  // classification of the ring: even, pp, pq, p2q, p2q-ext, local, other
  bool in_hypothesis = true;
  std::vector<ClosedFormValue> values;
};

/// Local rings (Z_{p^a}, F_p[x]/(x^k), and Z_n for prime-power n) get the
/// local-ring formulas, listed first; Z_n additionally gets the formula of
/// its family. `values` is empty for Z_n outside every family.
ClosedFormSet closed_forms_for(const FiniteRing& ring, GraphKind kind);

struct VariantOutcome {
  std::string formula;
  std::string family;
  std::string variant;  // "unique", "printed" or "corrected"
  RadicalSum closed;
  std::optional<EdgePartition> partition;  // only for families with a stated partition
  bool value_match = false;
  bool partition_match = true;

  bool match() const { return value_match && partition_match; }
  /// Printed variants are expected to fail somewhere; the others must not.
  bool required() const { return variant != "printed"; }
};

struct CaseResult {
  std::uint64_t n = 0;
  std::string ring;
  RingKind ring_kind = RingKind::Zn;
  GraphKind kind = GraphKind::Total;
  std::string family;  // even, pp, pq, p2q, p2q-ext, local, other
  bool in_hypothesis = true;

  RadicalSum oracle;
  EdgePartition oracle_partition;
  bool handshake_ok = false;
  DegreePair predicted;
  std::optional<DegreePair> observed;  // nullopt when a class is not degree-uniform
  bool two_is_unit = false;
  std::uint64_t unit_count = 0;

  std::vector<VariantOutcome> variants;
  std::chrono::microseconds elapsed{0};

  bool oracle_only() const { return variants.empty(); }
  bool degrees_match() const { return observed && *observed == predicted; }
  /// Handshake, degree prediction and every required variant hold.
  bool required_ok() const;
};

struct VerifyOptions {
  std::size_t ceiling = kDefaultCeiling;
};

/// Throws CeilingExceeded when the ring has more elements than the ceiling.
CaseResult verify_case(const FiniteRing& ring, GraphKind kind, const VerifyOptions& options = {});
CaseResult verify_case(std::uint64_t n, GraphKind kind, const VerifyOptions& options = {});

enum class SweepFamily { Even, PrimePower, PQ, P2Q, Local, All };

const char* to_string(SweepFamily f);

struct SweepOptions {
  SweepFamily family = SweepFamily::All;
  std::uint64_t min_n = 2;
  std::uint64_t max_n = 100;
  /// Largest F_p[x]/(x^k) for the Local family; 0 means max_n.
  std::uint64_t max_poly_order = 0;
  std::vector<GraphKind> kinds{GraphKind::Total, GraphKind::Unit};
  unsigned workers = 1;
  std::size_t ceiling = kDefaultCeiling;
  /// p^2 q with the squared prime larger than the other one.
  bool admit_out_of_hypothesis = true;
};

/// The rings a sweep would visit, ordered by order then name.
std::vector<FiniteRing> sweep_rings(const SweepOptions& options);

struct VariantTally {
  std::size_t matched = 0;
  std::size_t mismatched = 0;
};

struct SweepSummary {
  std::size_t cases = 0;
  std::size_t oracle_only = 0;
  std::size_t structural_failures = 0;  // handshake or degree prediction
  /// Keyed by "formula:variant"; out-of-hypothesis cases use an "ext-" prefix.
  std::map<std::string, VariantTally> by_variant;

  /// No structural failure and no mismatch among unique/corrected variants
  /// of in-hypothesis cases.
  bool required_ok() const;
};

struct SweepReport {
  std::vector<CaseResult> cases;
  SweepSummary summary;
};

SweepSummary summarize(std::span<const CaseResult> cases);

/// Throws EmptySweep when no ring matches, CeilingExceeded when a ring is
/// above the ceiling. Results do not depend on the worker count.
SweepReport sweep(const SweepOptions& options);

struct StructureReport {
  std::string ring;
  bool local = false;
  bool zero_divisor_clique = false;  // zero-divisors induce a complete subgraph of the total graph
  bool degrees_match = false;        // both graphs agree with predicted_degrees
  bool complement_duality = false;   // complement(total) == unit

  bool consistent() const { return zero_divisor_clique == local && degrees_match && complement_duality; }
};

StructureReport check_structure(const FiniteRing& ring);

struct IdentityEntry {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  RadicalSum residual;
  bool oracle_checked = false;
  bool oracle_match = false;  // brute-force SO of the circulant and its complement
};

struct IdentityReport {
  std::vector<IdentityEntry> entries;

  bool all_residuals_zero() const;
  bool all_oracles_match() const;
};

/// Offsets of a circulant k-regular graph on n vertices (n*k even, k < n).
std::set<std::size_t> regular_offsets(std::size_t n, std::size_t k);

IdentityReport identity_sweep(std::uint64_t n_max, std::uint64_t circulant_max_n = 100);

struct ErrataEntry {
  std::string formula;
  std::string printed_expression;
  std::string instance;  // smallest counterexample, e.g. "Z_45 unit"
  std::uint64_t n = 0;
  std::string quantity;  // what differs: "sombor index", "edge count", "degrees"
  std::string printed_value;
  std::string oracle_value;
};

/// One entry per printed statement that disagrees with the oracle on some
/// in-hypothesis case, citing the smallest such case. Empty if none do.
std::vector<ErrataEntry> errata_report(std::span<const CaseResult> results);

}  // namespace sombor
