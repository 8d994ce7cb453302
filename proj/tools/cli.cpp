#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sombor/closed_forms.hpp"
#include "sombor/error.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"
#include "sombor/radical_text.hpp"
#include "sombor/report.hpp"
#include "sombor/verify.hpp"

namespace sombor::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct RingArgs {
  std::string ring = "zn";
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint32_t alpha = 0;
  std::uint32_t k = 0;

  void add_to(CLI::App* app) {
    app->add_option("--ring", ring, "Ring kind")->check(CLI::IsMember({"zn", "zppow", "fpxk"}));
    app->add_option("--n", n, "Modulus for --ring zn");
    app->add_option("--p", p, "Prime for --ring zppow / fpxk");
    app->add_option("--alpha", alpha, "Exponent for --ring zppow");
    app->add_option("--k", k, "Truncation degree for --ring fpxk");
  }

  FiniteRing make() const {
    if (ring == "zn") {
      if (n == 0) throw UsageError("--ring zn requires --n");
      return FiniteRing::integers_mod(n);
    }
    if (ring == "zppow") {
      if (p == 0 || alpha == 0) throw UsageError("--ring zppow requires --p and --alpha");
      return FiniteRing::prime_power(p, alpha);
    }
    if (p == 0 || k == 0) throw UsageError("--ring fpxk requires --p and --k");
    return FiniteRing::truncated_poly(p, k);
  }
};

GraphKind parse_kind(const std::string& s) { return s == "unit" ? GraphKind::Unit : GraphKind::Total; }

std::vector<GraphKind> parse_kinds(const std::string& s) {
  if (s == "both") return {GraphKind::Total, GraphKind::Unit};
  return {parse_kind(s)};
}

SweepFamily parse_family(const std::string& s) {
  if (s == "even") return SweepFamily::Even;
  if (s == "pp") return SweepFamily::PrimePower;
  if (s == "pq") return SweepFamily::PQ;
  if (s == "p2q") return SweepFamily::P2Q;
  if (s == "local") return SweepFamily::Local;
  return SweepFamily::All;
}

void write_output(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

struct ValueStyle {
  bool exact = true;
  bool floating = false;

  std::string render(const RadicalSum& v) const {
    if (exact && floating) return render_radical(v) + " (" + render_float(v.to_double()) + ")";
    if (floating) return render_float(v.to_double());
    return render_radical(v);
  }
};

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  RingArgs ring;
  std::string graph = "total";
  std::string mode = "both";
  std::string variant = "corrected";
  std::string formula;
  std::string format = "text";
  bool exact = false;
  bool floating = false;
  std::string dump_graph;
  std::size_t ceiling = kDefaultCeiling;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  const auto ring = a.ring.make();
  const auto kind = parse_kind(a.graph);
  const bool want_oracle = a.mode != "closed";
  const bool want_closed = a.mode != "oracle";
  const ValueStyle style{a.exact || !a.floating, a.floating};

  std::optional<ClosedFormValue> closed;
  ClosedFormSet set;
  if (want_closed) {
    set = closed_forms_for(ring, kind);
    if (set.values.empty()) {
      err << "error: no closed form covers the " << to_string(kind) << " graph of " << ring.name() << " (family "
          << set.family << ")\n";
      return kOffFamily;
    }
    const std::string formula = a.formula.empty() ? set.values.front().formula : a.formula;
    const std::string wanted = a.variant == "printed" ? "printed" : "corrected";
    for (const auto& v : set.values)
      if (v.formula == formula && (v.variant == wanted || v.variant == "unique")) closed = v;
    if (!closed) {
      err << "error: " << formula << " does not apply to the " << to_string(kind) << " graph of " << ring.name()
          << "; applicable:";
      for (const auto& v : set.values) err << ' ' << v.formula;
      err << '\n';
      return kOffFamily;
    }
  }

  const bool printed = closed && closed->variant == "printed";
  const bool oracle_feasible = ring.order() <= a.ceiling;
  if ((want_oracle || !a.dump_graph.empty()) && !oracle_feasible)
    throw CeilingExceeded(ring.name() + " is above the vertex ceiling of " + std::to_string(a.ceiling));

  std::optional<RingGraph> rg;
  std::optional<RadicalSum> oracle;
  std::optional<EdgePartition> oracle_partition;
  if (want_oracle || !a.dump_graph.empty() || (printed && oracle_feasible)) {
    rg = ring_graph(ring, kind);
    oracle = sombor_bruteforce(rg->graph);
    oracle_partition = edge_partition_of(rg->graph, rg->classes);
  }
  if (!a.dump_graph.empty()) write_output(a.dump_graph, out, [&](std::ostream& o) { write_dimacs(o, rg->graph); });

  if (printed) {
    if (oracle && *oracle != closed->value) {
      err << "warning: the printed " << closed->formula << " formula disagrees with the brute-force value "
          << render_radical(*oracle) << "\n";
    } else if (!oracle) {
      for (const auto& v : set.values)
        if (v.formula == closed->formula && v.variant == "corrected" && v.value != closed->value)
          err << "warning: the printed " << closed->formula << " formula disagrees with the corrected value "
              << render_radical(v.value) << "\n";
    }
  }

  const auto degrees = predicted_degrees(ring, kind);
  const bool report_oracle = want_oracle && oracle.has_value();
  std::optional<bool> match;
  if (report_oracle && closed) match = (*oracle == closed->value) && (!closed->partition || *closed->partition == *oracle_partition);
  const std::optional<EdgePartition> partition =
      report_oracle ? oracle_partition : (closed ? closed->partition : std::nullopt);

  if (a.format == "json") {
    ordered_json j;
    j["ring"] = ring.name();
    j["graph"] = to_string(kind);
    j["family"] = closed ? closed->family : closed_forms_for(ring, kind).family;
    j["degrees_predicted"] = {{"zero_divisor", degrees.zero_divisor}, {"unit", degrees.unit}};
    if (report_oracle) {
      j["oracle"] = {{"exact", render_radical(*oracle)}, {"float", render_float(oracle->to_double())}};
      j["partition_oracle"] = to_json(*oracle_partition);
    }
    if (closed) {
      j["closed"] = {{"formula", closed->formula},
                     {"variant", closed->variant},
                     {"exact", render_radical(closed->value)},
                     {"float", render_float(closed->value.to_double())}};
      if (closed->partition) j["closed"]["partition"] = to_json(*closed->partition);
    }
    if (match) j["match"] = *match;
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << kCsvHeader << '\n';
    const auto fam = closed ? closed->family : closed_forms_for(ring, kind).family;
    const auto part = partition.value_or(EdgePartition{});
    out << ring.order() << ',' << ring.name() << ',' << to_string(kind) << ',' << fam << ','
        << (closed ? closed->variant : "none") << ',' << part.alpha << ',' << part.beta << ',' << part.gamma << ','
        << part.total << ',' << (closed ? render_radical(closed->value) : "") << ','
        << (report_oracle ? render_radical(*oracle) : "") << ',' << (match ? (*match ? "true" : "false") : "n/a")
        << ",\n";
  } else {
    out << "ring: " << ring.name() << '\n';
    out << "graph: " << to_string(kind) << '\n';
    out << "degrees: d_Z=" << degrees.zero_divisor << " d_U=" << degrees.unit << '\n';
    if (partition)
      out << "partition: alpha=" << partition->alpha << " beta=" << partition->beta << " gamma=" << partition->gamma
          << " edges=" << partition->total << '\n';
    if (report_oracle) out << "oracle: " << style.render(*oracle) << '\n';
    if (closed) out << "closed (" << closed->formula << ", " << closed->variant << "): " << style.render(closed->value) << '\n';
    if (match) out << "match: " << (*match ? "true" : "false") << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify / sweep

void write_text_report(std::ostream& out, const SweepReport& report, std::span<const ErrataEntry> errata) {
  for (const auto& c : report.cases) {
    out << c.ring << ' ' << to_string(c.kind) << " [" << c.family << "] oracle " << render_radical(c.oracle);
    if (c.oracle_only()) out << " (no closed form)";
    out << '\n';
    for (const auto& v : c.variants)
      out << "  " << v.formula << ' ' << v.variant << ": " << (v.match() ? "match" : "MISMATCH") << " "
          << render_radical(v.closed) << '\n';
  }
  out << "errata:" << (errata.empty() ? " none" : "") << '\n';
  for (const auto& e : errata)
    out << "  " << e.formula << " at " << e.instance << ": " << e.quantity << " printed " << e.printed_value
        << " vs oracle " << e.oracle_value << '\n';
}

void print_summary(std::ostream& err, const SweepSummary& s) {
  err << s.cases << " cases";
  if (s.oracle_only) err << ", " << s.oracle_only << " oracle-only";
  for (const auto& [k, t] : s.by_variant) err << ", " << k << " " << t.matched << "/" << t.matched + t.mismatched;
  if (s.structural_failures) err << ", " << s.structural_failures << " structural failures";
  err << (s.required_ok() ? " -- ok" : " -- FAILED") << '\n';
}

void emit_report(const SweepReport& report, const std::string& format, const std::string& path, bool timing,
                 std::ostream& out) {
  const auto errata = errata_report(report.cases);
  const ReportOptions options{"", timing};
  write_output(path, out, [&](std::ostream& o) {
    if (format == "json") {
      write_json(o, report, errata, options);
    } else if (format == "text") {
      write_text_report(o, report, errata);
    } else {
      write_csv(o, report, options);
    }
  });
}

struct VerifyArgs {
  RingArgs ring;
  std::string graph = "both";
  std::string format = "text";
  std::string out;
  std::size_t ceiling = kDefaultCeiling;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto ring = a.ring.make();
  SweepReport report;
  for (auto kind : parse_kinds(a.graph)) report.cases.push_back(verify_case(ring, kind, VerifyOptions{a.ceiling}));
  report.summary = summarize(report.cases);
  emit_report(report, a.format, a.out, false, out);
  print_summary(err, report.summary);
  return report.summary.required_ok() ? kOk : kMismatch;
}

struct SweepArgs {
  std::string family = "all";
  std::uint64_t min_n = 2;
  std::uint64_t max_n = 0;
  std::uint64_t max_poly_order = 0;
  std::string graph = "both";
  std::string format = "csv";
  std::string out;
  unsigned workers = 0;
  std::size_t ceiling = kDefaultCeiling;
  bool timing = false;
  bool no_extension = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepOptions o;
  o.family = parse_family(a.family);
  o.min_n = a.min_n;
  o.max_n = a.max_n;
  o.max_poly_order = a.max_poly_order;
  o.kinds = parse_kinds(a.graph);
  o.workers = a.workers ? a.workers : std::max(1U, std::thread::hardware_concurrency());
  o.ceiling = a.ceiling;
  o.admit_out_of_hypothesis = !a.no_extension;
  const auto report = sweep(o);
  emit_report(report, a.format, a.out, a.timing, out);
  err << "sweep " << a.family << ": ";
  print_summary(err, report.summary);
  for (const auto& [k, t] : report.summary.by_variant)
    if (k.starts_with("ext-"))
      err << "outside p < q: " << k.substr(4) << " matched " << t.matched << " of " << t.matched + t.mismatched
          << '\n';
  return report.summary.required_ok() ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// structure

struct StructureArgs {
  RingArgs ring;
  std::uint64_t max_n = 0;
  std::uint64_t local_max_order = 0;
  std::string format = "text";
  std::string out;
};

int cmd_structure(const StructureArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<FiniteRing> rings;
  if (a.max_n == 0 && a.local_max_order == 0) {
    rings.push_back(a.ring.make());
  } else {
    for (std::uint64_t n = 2; n <= a.max_n; ++n) rings.push_back(FiniteRing::integers_mod(n));
    if (a.local_max_order >= 2) {
      SweepOptions o;
      o.family = SweepFamily::Local;
      o.max_n = a.local_max_order;
      for (auto& r : sweep_rings(o)) rings.push_back(std::move(r));
    }
  }
  std::vector<StructureReport> reports;
  for (const auto& r : rings) reports.push_back(check_structure(r));
  const auto failures = std::count_if(reports.begin(), reports.end(), [](auto& r) { return !r.consistent(); });

  write_output(a.out, out, [&](std::ostream& o) {
    if (a.format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      write_json_document(o, ordered_json{{"rings", std::move(arr)}});
      return;
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    for (const auto& r : reports)
      o << r.ring << ": local=" << yn(r.local) << " zero-divisor clique=" << yn(r.zero_divisor_clique)
        << " degrees=" << (r.degrees_match ? "ok" : "MISMATCH") << " duality=" << (r.complement_duality ? "ok" : "MISMATCH")
        << (r.consistent() ? "" : "  <-- inconsistent") << '\n';
  });
  err << reports.size() << " rings checked, " << failures << " inconsistent\n";
  return failures == 0 ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// partition

struct PartitionArgs {
  RingArgs ring;
  std::string graph = "total";
  std::string mode = "both";
  std::string variant = "corrected";
  std::string format = "text";
  std::size_t ceiling = kDefaultCeiling;
};

int cmd_partition(const PartitionArgs& a, std::ostream& out, std::ostream& err) {
  const auto ring = a.ring.make();
  const auto kind = parse_kind(a.graph);

  std::optional<ClosedFormValue> closed;
  if (a.mode != "oracle") {
    const std::string wanted = a.variant == "printed" ? "printed" : "corrected";
    for (const auto& v : closed_forms_for(ring, kind).values)
      if (v.partition && !closed && (v.variant == wanted || v.variant == "unique")) closed = v;
    if (!closed) {
      err << "error: no closed-form edge partition covers the " << to_string(kind) << " graph of " << ring.name()
          << '\n';
      return kOffFamily;
    }
  }
  std::optional<EdgePartition> oracle;
  if (a.mode != "closed") {
    if (ring.order() > a.ceiling)
      throw CeilingExceeded(ring.name() + " is above the vertex ceiling of " + std::to_string(a.ceiling));
    const auto rg = ring_graph(ring, kind);
    oracle = edge_partition_of(rg.graph, rg.classes);
  }
  const bool match = !oracle || !closed || *oracle == *closed->partition;

  if (a.format == "json") {
    ordered_json j;
    j["ring"] = ring.name();
    j["graph"] = to_string(kind);
    if (oracle) j["partition_oracle"] = to_json(*oracle);
    if (closed) {
      j["formula"] = closed->formula;
      j["variant"] = closed->variant;
      j["partition_closed"] = to_json(*closed->partition);
    }
    if (oracle && closed) j["match"] = match;
    out << j.dump(2) << '\n';
  } else {
    out << "ring: " << ring.name() << "\ngraph: " << to_string(kind) << '\n';
    if (oracle) out << "oracle: " << oracle->to_string() << '\n';
    if (closed) out << "closed (" << closed->formula << ", " << closed->variant << "): " << closed->partition->to_string()
                    << '\n';
    if (oracle && closed) out << "match: " << (match ? "true" : "false") << '\n';
  }
  if (!match && closed->variant == "printed") {
    err << "warning: the printed " << closed->formula << " partition disagrees with the graph\n";
    return kOk;
  }
  return match ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// identity

struct IdentityArgs {
  std::uint64_t max_n = 50;
  std::uint64_t circulant_max_n = 100;
  std::string format = "text";
  std::string out;
};

int cmd_identity(const IdentityArgs& a, std::ostream& out, std::ostream& err) {
  const auto report = identity_sweep(a.max_n, a.circulant_max_n);
  const bool ok = report.all_residuals_zero() && report.all_oracles_match();
  const auto checked =
      std::count_if(report.entries.begin(), report.entries.end(), [](auto& e) { return e.oracle_checked; });
  write_output(a.out, out, [&](std::ostream& o) {
    if (a.format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& e : report.entries) arr.push_back(to_json(e));
      write_json_document(o, ordered_json{{"all_residuals_zero", report.all_residuals_zero()},
                                          {"all_oracles_match", report.all_oracles_match()},
                                          {"entries", std::move(arr)}});
      return;
    }
    o << "pairs (n,k): " << report.entries.size() << '\n';
    o << "residuals zero: " << (report.all_residuals_zero() ? "all" : "NOT all") << '\n';
    o << "circulant instances checked: " << checked << ", oracle agreement: "
      << (report.all_oracles_match() ? "all" : "NOT all") << '\n';
    for (const auto& e : report.entries)
      if (!e.residual.is_zero() || (e.oracle_checked && !e.oracle_match))
        o << "  failure at n=" << e.n << " k=" << e.k << ": residual " << render_radical(e.residual) << '\n';
  });
  if (!ok) err << "identity check failed\n";
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sombor index of total and unit graphs of finite commutative rings", "sombor"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Sombor index of one ring graph");
  compute.ring.add_to(c);
  c->add_option("--graph", compute.graph)->check(CLI::IsMember({"total", "unit"}));
  c->add_option("--mode", compute.mode)->check(CLI::IsMember({"oracle", "closed", "both"}));
  c->add_option("--variant", compute.variant)->check(CLI::IsMember({"printed", "corrected"}));
  c->add_option("--formula", compute.formula, "Closed form to use when several apply, e.g. so_unit_prime_power");
  c->add_option("--format", compute.format)->check(CLI::IsMember({"text", "json", "csv"}));
  c->add_flag("--exact", compute.exact, "Print exact radical values (default)");
  c->add_flag("--float", compute.floating, "Print floating-point values");
  c->add_option("--dump-graph", compute.dump_graph, "Write the graph as a DIMACS edge list");
  c->add_option("--ceiling", compute.ceiling, "Largest ring built explicitly");

  PartitionArgs partition;
  auto* pa = app.add_subcommand("partition", "Edge counts by endpoint class (zero-divisor/unit)");
  partition.ring.add_to(pa);
  pa->add_option("--graph", partition.graph)->check(CLI::IsMember({"total", "unit"}));
  pa->add_option("--mode", partition.mode)->check(CLI::IsMember({"oracle", "closed", "both"}));
  pa->add_option("--variant", partition.variant)->check(CLI::IsMember({"printed", "corrected"}));
  pa->add_option("--format", partition.format)->check(CLI::IsMember({"text", "json"}));
  pa->add_option("--ceiling", partition.ceiling);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Closed forms versus brute force for one ring");
  verify.ring.add_to(v);
  v->add_option("--graph", verify.graph)->check(CLI::IsMember({"total", "unit", "both"}));
  v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json", "csv"}));
  v->add_option("--out", verify.out);
  v->add_option("--ceiling", verify.ceiling);

  SweepArgs sweep_args;
  auto* s = app.add_subcommand("sweep", "Closed forms versus brute force over a family");
  s->add_option("--family", sweep_args.family)->check(CLI::IsMember({"even", "pp", "pq", "p2q", "local", "all"}));
  s->add_option("--min-n", sweep_args.min_n);
  s->add_option("--max-n", sweep_args.max_n)->required();
  s->add_option("--max-poly-order", sweep_args.max_poly_order, "Largest F_p[x]/(x^k) for --family local");
  s->add_option("--graph", sweep_args.graph)->check(CLI::IsMember({"total", "unit", "both"}));
  s->add_option("--format", sweep_args.format)->check(CLI::IsMember({"csv", "json", "text"}));
  s->add_option("--out", sweep_args.out);
  s->add_option("--workers", sweep_args.workers)->check(CLI::PositiveNumber);
  s->add_option("--ceiling", sweep_args.ceiling);
  s->add_flag("--timing", sweep_args.timing, "Fill the micros column");
  s->add_flag("--no-extension", sweep_args.no_extension, "Skip p^2 q moduli with the squared prime larger");

  StructureArgs structure;
  auto* st = app.add_subcommand("structure", "Degree, duality and zero-divisor clique checks");
  structure.ring.add_to(st);
  st->add_option("--max-n", structure.max_n, "Check every Z_n with 2 <= n <= N");
  st->add_option("--local-max-order", structure.local_max_order, "Also check local rings up to this order");
  st->add_option("--format", structure.format)->check(CLI::IsMember({"text", "json"}));
  st->add_option("--out", structure.out);

  IdentityArgs identity;
  auto* id = app.add_subcommand("identity", "SO(K_n) = (sqrt SO(G) + sqrt SO(G'))^2 for k-regular G");
  id->add_option("--max-n", identity.max_n);
  id->add_option("--circulant-max-n", identity.circulant_max_n);
  id->add_option("--format", identity.format)->check(CLI::IsMember({"text", "json"}));
  id->add_option("--out", identity.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return cmd_compute(compute, out, err);
    if (*pa) return cmd_partition(partition, out, err);
    if (*v) return cmd_verify(verify, out, err);
    if (*s) return cmd_sweep(sweep_args, out, err);
    if (*st) return cmd_structure(structure, out, err);
    if (*id) return cmd_identity(identity, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const OffFamily& e) {
    err << "error: " << e.what() << '\n';
    return kOffFamily;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sombor::cli
