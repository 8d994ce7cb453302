#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sombor/closed_forms.hpp"
#include "sombor/error.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"
#include "sombor/radical_text.hpp"
#include "sombor/report.hpp"
#include "sombor/verify.hpp"

namespace py = pybind11;
using namespace sombor;

namespace {

GraphKind kind_of(const std::string& s) {
  if (s == "total") return GraphKind::Total;
  if (s == "unit") return GraphKind::Unit;
  throw InvalidArgument("graph must be 'total' or 'unit', got '" + s + "'");
}

SweepFamily family_of(const std::string& s) {
  for (auto f : {SweepFamily::Even, SweepFamily::PrimePower, SweepFamily::PQ, SweepFamily::P2Q, SweepFamily::Local,
                 SweepFamily::All})
    if (s == to_string(f)) return f;
  throw InvalidArgument("unknown family '" + s + "'");
}

FormulaVariant variant_of(const std::string& s) {
  if (s == "printed") return FormulaVariant::AsPrinted;
  if (s == "corrected") return FormulaVariant::Corrected;
  throw InvalidArgument("variant must be 'printed' or 'corrected', got '" + s + "'");
}

py::tuple partition_tuple(const EdgePartition& p) { return py::make_tuple(p.alpha, p.beta, p.gamma, p.total); }

// JSON documents cross the boundary as text; the package decodes them.
std::string dump(const nlohmann::ordered_json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_sombor, m) {
  m.doc() = "Exact Sombor indices of total and unit graphs of finite rings";

  auto base = py::register_exception<Error>(m, "SomborError", PyExc_ValueError);
  py::register_exception<OffFamily>(m, "OffFamilyError", base.ptr());
  py::register_exception<NonLocalRing>(m, "NonLocalRingError", base.ptr());
  py::register_exception<CeilingExceeded>(m, "CeilingExceededError", base.ptr());
  py::register_exception<EmptySweep>(m, "EmptySweepError", base.ptr());

  py::class_<RadicalSum>(m, "Radical")
      .def(py::init<>())
      .def_static("parse", [](const std::string& s) { return parse_radical(s); })
      .def_static("term", [](std::int64_t num, std::int64_t den, std::uint64_t m) {
        return RadicalSum::term(Rational(num, den), m);
      }, py::arg("num"), py::arg("den"), py::arg("radicand"))
      .def("terms", [](const RadicalSum& r) {
        py::dict d;
        for (const auto& [s, c] : r.terms()) d[py::int_(s)] = py::make_tuple(c.num(), c.den());
        return d;
      }, "Square-free radicand -> (numerator, denominator).")
      .def("is_zero", &RadicalSum::is_zero)
      .def("__float__", &RadicalSum::to_double)
      .def("__str__", [](const RadicalSum& r) { return render_radical(r); })
      .def("__repr__", [](const RadicalSum& r) { return "Radical('" + render_radical(r) + "')"; })
      .def("__hash__", [](const RadicalSum& r) { return py::hash(py::str(render_radical(r))); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self);

  py::class_<FiniteRing>(m, "Ring")
      .def_static("integers_mod", &FiniteRing::integers_mod, py::arg("n"))
      .def_static("prime_power", &FiniteRing::prime_power, py::arg("p"), py::arg("alpha"))
      .def_static("truncated_poly", &FiniteRing::truncated_poly, py::arg("p"), py::arg("k"))
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("name", &FiniteRing::name)
      .def("is_local", &FiniteRing::is_local)
      .def("is_unit", &FiniteRing::is_unit, py::arg("x"))
      .def("unit_count", [](const FiniteRing& r) { return unit_count(r); })
      .def("__repr__", [](const FiniteRing& r) { return "Ring('" + r.name() + "')"; });

  m.def("sombor_index", [](const FiniteRing& ring, const std::string& graph) {
    return sombor_bruteforce(ring_graph(ring, kind_of(graph)).graph);
  }, py::arg("ring"), py::arg("graph"), "Brute-force Sombor index of the total or unit graph.");

  m.def("edge_partition", [](const FiniteRing& ring, const std::string& graph) {
    const auto rg = ring_graph(ring, kind_of(graph));
    return partition_tuple(edge_partition_of(rg.graph, rg.classes));
  }, py::arg("ring"), py::arg("graph"), "(zero-divisor pairs, mixed, unit pairs, total).");

  m.def("edges", [](const FiniteRing& ring, const std::string& graph) {
    return ring_graph(ring, kind_of(graph)).graph.edges();
  }, py::arg("ring"), py::arg("graph"));

  m.def("predicted_degrees", [](const FiniteRing& ring, const std::string& graph) {
    const auto d = predicted_degrees(ring, kind_of(graph));
    return py::make_tuple(d.zero_divisor, d.unit);
  }, py::arg("ring"), py::arg("graph"), "(zero-divisor degree, unit degree).");

  m.def("closed_forms", [](const FiniteRing& ring, const std::string& graph) {
    py::list out;
    for (const auto& v : closed_forms_for(ring, kind_of(graph)).values) {
      py::dict d;
      d["formula"] = v.formula;
      d["family"] = v.family;
      d["variant"] = v.variant;
      d["value"] = v.value;
      d["partition"] = v.partition ? py::object(partition_tuple(*v.partition)) : py::object(py::none());
      out.append(d);
    }
    return out;
  }, py::arg("ring"), py::arg("graph"), "Every closed form that applies, local-ring formulas first.");

  m.def("so_total_even", &so_total_even, py::arg("n"));
  m.def("so_unit_even", &so_unit_even, py::arg("n"));
  m.def("so_total_prime_power", &so_total_prime_power, py::arg("p"), py::arg("alpha"));
  m.def("so_unit_prime_power", [](std::uint64_t p, std::uint32_t a, const std::string& variant) {
    return so_unit_prime_power(p, a, variant_of(variant));
  }, py::arg("p"), py::arg("alpha"), py::arg("variant") = "corrected");
  m.def("so_total_pq", &so_total_pq, py::arg("p"), py::arg("q"));
  m.def("so_unit_pq", &so_unit_pq, py::arg("p"), py::arg("q"));
  m.def("so_total_p2q", &so_total_p2q, py::arg("p"), py::arg("q"));
  m.def("so_unit_p2q", [](std::uint64_t p, std::uint64_t q, const std::string& variant) {
    return so_unit_p2q(p, q, variant_of(variant));
  }, py::arg("p"), py::arg("q"), py::arg("variant") = "corrected");
  m.def("so_total_local", [](const FiniteRing& ring) { return so_total_local(to_local_spec(ring)); }, py::arg("ring"));
  m.def("so_unit_local", [](const FiniteRing& ring, const std::string& variant) {
    return so_unit_local(to_local_spec(ring), variant_of(variant));
  }, py::arg("ring"), py::arg("variant") = "corrected");
  m.def("so_regular", &so_regular, py::arg("n"), py::arg("k"));
  m.def("complement_identity_residual", &complement_identity_residual, py::arg("n"), py::arg("k"));

  m.def("_verify_json", [](const FiniteRing& ring, const std::string& graph, std::size_t ceiling) {
    return dump(to_json(verify_case(ring, kind_of(graph), VerifyOptions{ceiling})));
  }, py::arg("ring"), py::arg("graph"), py::arg("ceiling") = kDefaultCeiling);

  m.def("_sweep_json", [](const std::string& family, std::uint64_t min_n, std::uint64_t max_n,
                          std::uint64_t max_poly_order, const std::vector<std::string>& graphs, unsigned workers) {
    SweepOptions o;
    o.family = family_of(family);
    o.min_n = min_n;
    o.max_n = max_n;
    o.max_poly_order = max_poly_order;
    o.kinds.clear();
    for (const auto& g : graphs) o.kinds.push_back(kind_of(g));
    o.workers = workers;
    SweepReport report;
    {
      py::gil_scoped_release release;
      report = sweep(o);
    }
    std::ostringstream s;
    write_json(s, report, errata_report(report.cases), ReportOptions{});
    return s.str();
  });
}
