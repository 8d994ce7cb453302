#include "sombor/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "sombor/error.hpp"
#include "sombor/indices.hpp"
#include "sombor/radical_text.hpp"

namespace sombor {

namespace {

std::optional<DegreePair> observed_degrees(const RingGraph& rg) {
  std::optional<std::uint64_t> dz;
  std::optional<std::uint64_t> du;
  const auto deg = rg.graph.degrees();
  for (std::size_t v = 0; v < deg.size(); ++v) {
    auto& slot = rg.classes.kind[v] == VertexKind::Unit ? du : dz;
    if (!slot) {
      slot = deg[v];
    } else if (*slot != deg[v]) {
      return std::nullopt;
    }
  }
  // Every ring has at least one unit and one zero-divisor (0).
  return DegreePair{dz.value_or(0), du.value_or(0)};
}

VariantOutcome outcome(const ClosedFormValue& v, const CaseResult& c) {
  VariantOutcome o;
  o.formula = v.formula;
  o.family = v.family;
  o.variant = v.variant;
  o.closed = v.value;
  o.value_match = v.value == c.oracle;
  o.partition = v.partition;
  if (v.partition) o.partition_match = *v.partition == c.oracle_partition;
  return o;
}

void add_zn_closed_forms(ClosedFormSet& set, const ModulusFamily& fam, std::uint64_t n, GraphKind kind) {
  const bool total = kind == GraphKind::Total;
  constexpr auto kPrinted = FormulaVariant::AsPrinted;
  constexpr auto kCorrected = FormulaVariant::Corrected;
  const auto tag = family_tag(fam);
  auto add = [&](const char* formula, const char* variant, RadicalSum value,
                 std::optional<EdgePartition> partition = std::nullopt) {
    set.values.push_back({formula, tag, variant, std::move(value), partition});
  };
  switch (fam.tag) {
    case Family::Even:
      if (total) {
        add("so_total_even", "unique", so_total_even(n));
      } else {
        add("so_unit_even", "unique", so_unit_even(n));
      }
      break;
    case Family::OddPrimePower:
      if (total) {
        add("so_total_prime_power", "unique", so_total_prime_power(fam.p, fam.alpha));
      } else {
        add("so_unit_prime_power", "printed", so_unit_prime_power(fam.p, fam.alpha, kPrinted));
        add("so_unit_prime_power", "corrected", so_unit_prime_power(fam.p, fam.alpha, kCorrected));
      }
      break;
    case Family::OddPQ:
      if (total) {
        add("so_total_pq", "unique", so_total_pq(fam.p, fam.q), total_pq_partition(fam.p, fam.q));
      } else {
        add("so_unit_pq", "unique", so_unit_pq(fam.p, fam.q), unit_pq_partition(fam.p, fam.q));
      }
      break;
    case Family::OddPSquaredQ:
      set.in_hypothesis = !fam.out_of_hypothesis;
      if (total) {
        add("so_total_p2q", "unique", so_total_p2q(fam.p, fam.q), total_p2q_partition(fam.p, fam.q));
      } else {
        add("so_unit_p2q", "printed", so_unit_p2q(fam.p, fam.q, kPrinted), unit_p2q_partition(fam.p, fam.q, kPrinted));
        add("so_unit_p2q", "corrected", so_unit_p2q(fam.p, fam.q, kCorrected),
            unit_p2q_partition(fam.p, fam.q, kCorrected));
      }
      break;
    case Family::OtherOdd:
      break;
  }
}

void add_local_closed_forms(ClosedFormSet& set, const FiniteRing& ring, GraphKind kind) {
  const auto spec = to_local_spec(ring);
  auto add = [&](const char* formula, const char* variant, RadicalSum value) {
    set.values.push_back({formula, "local", variant, std::move(value), std::nullopt});
  };
  if (kind == GraphKind::Total) {
    add("so_total_local", "unique", so_total_local(spec));
  } else if (!spec.two_is_unit) {
    add("so_unit_local", "unique", so_unit_local(spec));
  } else {
    add("so_unit_local", "printed", so_unit_local(spec, FormulaVariant::AsPrinted));
    add("so_unit_local", "corrected", so_unit_local(spec, FormulaVariant::Corrected));
  }
}

}  // namespace

ClosedFormSet closed_forms_for(const FiniteRing& ring, GraphKind kind) {
  ClosedFormSet set;
  if (ring.is_local()) add_local_closed_forms(set, ring, kind);
  if (ring.kind() == RingKind::Zn) {
    const auto fam = classify(ring.modulus());
    set.family = family_tag(fam);
    add_zn_closed_forms(set, fam, ring.order(), kind);
  } else {
    set.family = "local";
  }
  return set;
}

bool CaseResult::required_ok() const {
  if (!handshake_ok || !degrees_match()) return false;
  if (!in_hypothesis) return true;
  return std::all_of(variants.begin(), variants.end(),
                     [](const VariantOutcome& v) { return !v.required() || v.match(); });
}

CaseResult verify_case(const FiniteRing& ring, GraphKind kind, const VerifyOptions& options) {
  if (ring.order() > options.ceiling)
    throw CeilingExceeded(ring.name() + " has " + std::to_string(ring.order()) + " elements, above the ceiling of " +
                          std::to_string(options.ceiling));
  const auto start = std::chrono::steady_clock::now();

  CaseResult c;
  c.n = ring.order();
  c.ring = ring.name();
  c.ring_kind = ring.kind();
  c.kind = kind;

  const auto rg = ring_graph(ring, kind);
  c.oracle = sombor_bruteforce(rg.graph);
  c.oracle_partition = edge_partition_of(rg.graph, rg.classes);
  std::uint64_t degree_sum = 0;
  for (auto d : rg.graph.degrees()) degree_sum += d;
  c.handshake_ok = degree_sum == 2 * rg.graph.edge_count() && c.oracle_partition.consistent();
  c.predicted = predicted_degrees(ring, kind);
  c.observed = observed_degrees(rg);
  c.unit_count = unit_count(ring);
  c.two_is_unit = ring.is_unit(ring.add(ring.one(), ring.one()));

  const auto closed = closed_forms_for(ring, kind);
  c.family = closed.family;
  c.in_hypothesis = closed.in_hypothesis;
  for (const auto& v : closed.values) c.variants.push_back(outcome(v, c));

  c.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return c;
}

CaseResult verify_case(std::uint64_t n, GraphKind kind, const VerifyOptions& options) {
  return verify_case(FiniteRing::integers_mod(n), kind, options);
}

// ---------------------------------------------------------------------------
// Sweeps

const char* to_string(SweepFamily f) {
  switch (f) {
    case SweepFamily::Even: return "even";
    case SweepFamily::PrimePower: return "pp";
    case SweepFamily::PQ: return "pq";
    case SweepFamily::P2Q: return "p2q";
    case SweepFamily::Local: return "local";
    case SweepFamily::All: return "all";
  }
  return "all";
}

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool zn_in_family(const ModulusFamily& fam, const SweepOptions& options) {
  switch (options.family) {
    case SweepFamily::Even: return fam.tag == Family::Even;
    case SweepFamily::PrimePower: return fam.tag == Family::OddPrimePower;
    case SweepFamily::PQ: return fam.tag == Family::OddPQ;
    case SweepFamily::P2Q:
      return fam.tag == Family::OddPSquaredQ && (options.admit_out_of_hypothesis || !fam.out_of_hypothesis);
    case SweepFamily::All: return true;
    case SweepFamily::Local: return false;
  }
  return false;
}

}  // namespace

std::vector<FiniteRing> sweep_rings(const SweepOptions& options) {
  std::vector<FiniteRing> rings;
  const auto lo = std::max<std::uint64_t>(options.min_n, 2);
  if (options.family != SweepFamily::Local) {
    for (std::uint64_t n = lo; n <= options.max_n; ++n)
      if (zn_in_family(classify(Modulus(n)), options)) rings.push_back(FiniteRing::integers_mod(n));
    return rings;
  }
  const auto poly_max = options.max_poly_order ? options.max_poly_order : options.max_n;
  for (auto p : primes_up_to(std::max(options.max_n, poly_max))) {
    std::uint64_t pk = p;
    for (std::uint32_t e = 1; pk <= options.max_n; ++e, pk *= p)
      if (pk >= lo) rings.push_back(FiniteRing::prime_power(p, e));
    pk = p;
    for (std::uint32_t e = 1; pk <= poly_max; ++e, pk *= p)
      if (pk >= lo) rings.push_back(FiniteRing::truncated_poly(p, e));
  }
  std::stable_sort(rings.begin(), rings.end(), [](const FiniteRing& a, const FiniteRing& b) {
    return std::forward_as_tuple(a.order(), a.name()) < std::forward_as_tuple(b.order(), b.name());
  });
  return rings;
}

bool SweepSummary::required_ok() const {
  if (structural_failures != 0) return false;
  for (const auto& [key, tally] : by_variant) {
    if (key.starts_with("ext-") || key.ends_with(":printed")) continue;
    if (tally.mismatched != 0) return false;
  }
  return true;
}

SweepSummary summarize(std::span<const CaseResult> cases) {
  SweepSummary s;
  s.cases = cases.size();
  for (const auto& c : cases) {
    if (c.oracle_only()) ++s.oracle_only;
    if (!c.handshake_ok || !c.degrees_match()) ++s.structural_failures;
    for (const auto& v : c.variants) {
      auto& t = s.by_variant[(c.in_hypothesis ? "" : "ext-") + v.formula + ":" + v.variant];
      ++(v.match() ? t.matched : t.mismatched);
    }
  }
  return s;
}

SweepReport sweep(const SweepOptions& options) {
  const auto rings = sweep_rings(options);
  if (rings.empty() || options.kinds.empty())
    throw EmptySweep(std::string("no ") + to_string(options.family) + " rings with order in [" +
                     std::to_string(options.min_n) + ", " + std::to_string(options.max_n) + "]");
  for (const auto& r : rings)
    if (r.order() > options.ceiling)
      throw CeilingExceeded(r.name() + " exceeds the vertex ceiling of " + std::to_string(options.ceiling));

  struct Job {
    const FiniteRing* ring;
    GraphKind kind;
  };
  std::vector<Job> jobs;
  for (const auto& r : rings)
    for (auto k : options.kinds) jobs.push_back({&r, k});

  SweepReport report;
  report.cases.resize(jobs.size());
  const VerifyOptions vopts{options.ceiling};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        report.cases[i] = verify_case(*jobs[i].ring, jobs[i].kind, vopts);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(jobs.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  report.summary = summarize(report.cases);
  return report;
}

// ---------------------------------------------------------------------------
// Structure

StructureReport check_structure(const FiniteRing& ring) {
  StructureReport r;
  r.ring = ring.name();
  r.local = ring.is_local();
  const auto total = total_graph(ring);
  const auto unit = unit_graph(ring);

  const auto zd = total.classes.vertices_of(VertexKind::ZeroDivisor);
  r.zero_divisor_clique = is_complete(induced_subgraph(total.graph, zd));

  auto degrees_ok = [&](const RingGraph& rg, GraphKind kind) {
    const auto pred = predicted_degrees(ring, kind);
    const auto deg = rg.graph.degrees();
    for (std::size_t v = 0; v < deg.size(); ++v) {
      const auto want = rg.classes.kind[v] == VertexKind::Unit ? pred.unit : pred.zero_divisor;
      if (deg[v] != want) return false;
    }
    return true;
  };
  r.degrees_match = degrees_ok(total, GraphKind::Total) && degrees_ok(unit, GraphKind::Unit);
  r.complement_duality = complement(total.graph) == unit.graph;
  return r;
}

// ---------------------------------------------------------------------------
// k-regular graphs and their complements

bool IdentityReport::all_residuals_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const IdentityEntry& e) { return e.residual.is_zero(); });
}

bool IdentityReport::all_oracles_match() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const IdentityEntry& e) { return !e.oracle_checked || e.oracle_match; });
}

std::set<std::size_t> regular_offsets(std::size_t n, std::size_t k) {
  if (k >= n || (n * k) % 2 != 0)
    throw InvalidArgument("no " + std::to_string(k) + "-regular graph on " + std::to_string(n) + " vertices");
  std::set<std::size_t> offsets;
  if (k % 2 == 1) offsets.insert(n / 2);  // n is even here; n/2 contributes degree 1
  for (std::size_t s = 1; s <= k / 2; ++s) offsets.insert(s);
  return offsets;
}

IdentityReport identity_sweep(std::uint64_t n_max, std::uint64_t circulant_max_n) {
  if (n_max < 3) throw InvalidArgument("identity sweep needs n_max >= 3");
  IdentityReport report;
  for (std::uint64_t n = 3; n <= n_max; ++n) {
    for (std::uint64_t k = 0; k < n; ++k) {
      if ((n * k) % 2 != 0) continue;
      IdentityEntry e;
      e.n = n;
      e.k = k;
      e.residual = complement_identity_residual(n, k);
      if (n <= circulant_max_n) {
        e.oracle_checked = true;
        const auto g = circulant_graph(n, regular_offsets(n, k));
        const auto gbar = complement(g);
        e.oracle_match = sombor_bruteforce(g) == so_regular(n, k) && sombor_bruteforce(gbar) == so_regular(n, n - k - 1);
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Errata

namespace {

std::string printed_expression(const std::string& formula) {
  if (formula == "so_unit_prime_power")
    return "phi*(n-phi)*sqrt(phi^2 + (phi-1)^2) + [phi*(phi-1) - (n-phi)]*(phi-1)/sqrt(2), phi = phi(n), n = p^a";
  if (formula == "so_unit_p2q") return "|E| = p^2*(p-1)*(q-1)*(p^2*q - 1)/2";
  if (formula == "so_unit_local") return "|U|*(n-|U|)*sqrt(|U|^2 + (n-|U|)^2) when 2 is a unit";
  return formula;
}

std::string degree_text(const DegreePair& d) {
  return "d_Z=" + std::to_string(d.zero_divisor) + ", d_U=" + std::to_string(d.unit);
}

auto case_key(const CaseResult& c) {
  return std::make_tuple(c.n, static_cast<int>(c.ring_kind), c.ring, static_cast<int>(c.kind));
}

}  // namespace

std::vector<ErrataEntry> errata_report(std::span<const CaseResult> results) {
  std::map<std::string, std::pair<const CaseResult*, ErrataEntry>> found;
  auto offer = [&](const CaseResult& c, ErrataEntry e) {
    const std::string key = e.formula;
    auto it = found.find(key);
    if (it == found.end() || case_key(c) < case_key(*it->second.first)) found[key] = {&c, std::move(e)};
  };

  for (const auto& c : results) {
    const std::string instance = c.ring + " " + to_string(c.kind);
    if (c.in_hypothesis) {
      for (const auto& v : c.variants) {
        if (v.variant != "printed" || v.match()) continue;
        ErrataEntry e{v.formula, printed_expression(v.formula), instance, c.n, "sombor index", render_radical(v.closed),
                      render_radical(c.oracle)};
        if (v.partition && !v.partition_match && v.partition->total != c.oracle_partition.total) {
          e.quantity = "edge count";
          e.printed_value = std::to_string(v.partition->total);
          e.oracle_value = std::to_string(c.oracle_partition.total);
        }
        offer(c, std::move(e));
      }
    }
    // The general-ring statement of unit-graph degrees when 2 is a unit gives
    // zero-divisors |U|-1 and units |U|; compare with what the graph shows.
    if (c.kind == GraphKind::Unit && c.two_is_unit && c.observed) {
      const DegreePair claim{c.unit_count - 1, c.unit_count};
      if (claim != *c.observed) {
        offer(c, ErrataEntry{"unit_graph_degrees_general_ring",
                             "d_x = |U|-1 for x in Z(R), d_x = |U| for x not in Z(R), when 2 is a unit", instance, c.n,
                             "degrees", degree_text(claim), degree_text(*c.observed)});
      }
    }
  }

  std::vector<ErrataEntry> out;
  for (auto& [key, entry] : found) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace sombor
