#include "sombor/graph.hpp"

#include <ostream>
#include <string>

#include "sombor/error.hpp"

namespace sombor {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), degrees_(n, 0) {
  if (n > kMaxVertices)
    throw CeilingExceeded("graph with " + std::to_string(n) + " vertices exceeds the dense limit of " +
                          std::to_string(kMaxVertices));
}

void Graph::finalize() {
  std::size_t twice = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    std::uint64_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::uint64_t>(std::popcount(bits_[u * words_ + w]));
    degrees_[u] = d;
    twice += d;
  }
  edges_ = twice / 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop " + std::to_string(u));
    g.set_edge(u, v);
  }
  g.finalize();
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for_each_edge([&](std::size_t u, std::size_t v) { out.emplace_back(u, v); });
  return out;
}

Graph complement(const Graph& g) {
  Graph c(g.n_);
  const std::size_t tail = g.n_ % 64;
  const std::uint64_t last_mask = tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  for (std::size_t u = 0; u < g.n_; ++u) {
    for (std::size_t w = 0; w < g.words_; ++w) {
      auto word = ~g.bits_[u * g.words_ + w];
      if (w + 1 == g.words_) word &= last_mask;
      c.bits_[u * c.words_ + w] = word;
    }
    c.bits_[u * c.words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  }
  c.finalize();
  return c;
}

Graph complete_graph(std::size_t n) {
  return Graph::from_predicate(n, [](std::size_t, std::size_t) { return true; });
}

Graph circulant_graph(std::size_t n, const std::set<std::size_t>& offsets) {
  for (auto s : offsets)
    if (s == 0 || s > n / 2)
      throw InvalidArgument("circulant offset " + std::to_string(s) + " outside 1.." + std::to_string(n / 2));
  return Graph::from_predicate(n, [&](std::size_t u, std::size_t v) {
    const auto d = v - u;  // u < v
    return offsets.count(d) > 0 || offsets.count(n - d) > 0;
  });
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = a.vertex_count();
  auto edges = a.edges();
  b.for_each_edge([&](std::size_t u, std::size_t v) { edges.emplace_back(u + shift, v + shift); });
  return Graph::from_edges(shift + b.vertex_count(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  return Graph::from_predicate(vertices.size(),
                               [&](std::size_t i, std::size_t j) { return g.adjacent(vertices[i], vertices[j]); });
}

bool is_complete(const Graph& g) {
  const auto n = g.vertex_count();
  for (auto d : g.degrees())
    if (d + 1 != n) return false;
  return true;
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  g.for_each_edge([&](std::size_t u, std::size_t v) { out << "e " << u + 1 << ' ' << v + 1 << '\n'; });
}

// ---------------------------------------------------------------------------

const char* to_string(GraphKind kind) { return kind == GraphKind::Total ? "total" : "unit"; }

std::vector<std::size_t> VertexClasses::vertices_of(VertexKind k) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < kind.size(); ++v)
    if (kind[v] == k) out.push_back(v);
  return out;
}

VertexClasses classify_vertices(const FiniteRing& ring) {
  VertexClasses c;
  c.kind.resize(ring.order());
  for (std::uint64_t x = 0; x < ring.order(); ++x) {
    const bool unit = ring.is_unit(x);
    c.kind[x] = unit ? VertexKind::Unit : VertexKind::ZeroDivisor;
    ++(unit ? c.units : c.zero_divisors);
  }
  return c;
}

namespace {

// want_unit == true: adjacent iff x + y is a unit; false: iff a zero-divisor.
RingGraph build_ring_graph(const FiniteRing& ring, bool want_unit) {
  const auto n = static_cast<std::size_t>(ring.order());
  if (n > Graph::kMaxVertices)
    throw CeilingExceeded(ring.name() + " has more elements than the dense graph limit");
  RingGraph rg;
  rg.classes = classify_vertices(ring);
  std::vector<std::uint8_t> hit(n);
  for (std::size_t x = 0; x < n; ++x) hit[x] = (rg.classes.kind[x] == VertexKind::Unit) == want_unit;

  if (ring.kind() == RingKind::TruncatedPoly) {
    rg.graph = Graph::from_predicate(n, [&](std::size_t x, std::size_t y) { return hit[ring.add(x, y)] != 0; });
  } else {
    rg.graph = Graph::from_predicate(n, [&](std::size_t x, std::size_t y) {
      auto s = x + y;
      if (s >= n) s -= n;
      return hit[s] != 0;
    });
  }
  return rg;
}

}  // namespace

RingGraph total_graph(const FiniteRing& ring) { return build_ring_graph(ring, false); }
RingGraph unit_graph(const FiniteRing& ring) { return build_ring_graph(ring, true); }

RingGraph ring_graph(const FiniteRing& ring, GraphKind kind) {
  return kind == GraphKind::Total ? total_graph(ring) : unit_graph(ring);
}

DegreePair predicted_degrees(std::uint64_t order, std::uint64_t units, bool two_is_unit, GraphKind kind) {
  const auto non_units = order - units;
  if (kind == GraphKind::Total) {
    if (!two_is_unit) return {non_units - 1, non_units - 1};
    return {non_units - 1, non_units};
  }
  if (!two_is_unit) return {units, units};
  return {units, units - 1};
}

DegreePair predicted_degrees(const FiniteRing& ring, GraphKind kind) {
  const auto two = ring.add(ring.one(), ring.one());
  return predicted_degrees(ring.order(), unit_count(ring), ring.is_unit(two), kind);
}

DegreePair predicted_degrees(const LocalRingSpec& spec, GraphKind kind) {
  return predicted_degrees(spec.order, spec.unit_count, spec.two_is_unit, kind);
}

EdgePartition edge_partition_of(const Graph& g, const VertexClasses& classes) {
  if (classes.kind.size() != g.vertex_count())
    throw InvalidArgument("vertex classes do not cover the graph");
  std::int64_t counts[3] = {0, 0, 0};
  g.for_each_edge([&](std::size_t u, std::size_t v) {
    const int units = (classes.kind[u] == VertexKind::Unit) + (classes.kind[v] == VertexKind::Unit);
    ++counts[units];
  });
  return {counts[0], counts[1], counts[2], static_cast<std::int64_t>(g.edge_count())};
}

}  // namespace sombor
