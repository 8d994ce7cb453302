#pragma once

/**
 * @file graph.hpp
 * @brief Dense simple graphs and the ring graphs built on them.
 *
 * Adjacency is a row-major bit matrix. Edges are always visited in
 * lexicographic (u < v) order so that anything derived from edge iteration
 * is reproducible.
 */

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "sombor/edge_partition.hpp"
#include "sombor/ring.hpp"

namespace sombor {

class Graph {
 public:
  /// Hard limit for the dense representation (128 MiB of adjacency bits).
  static constexpr std::size_t kMaxVertices = std::size_t{1} << 15;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Tests every unordered pair u < v once.
  template <class Adjacent>
  static Graph from_predicate(std::size_t n, Adjacent&& adjacent) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (adjacent(u, v)) g.set_edge(u, v);
    g.finalize();
    return g;
  }

  static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::uint64_t degree(std::size_t v) const { return degrees_[v]; }
  std::span<const std::uint64_t> degrees() const { return degrees_; }

  /// f(u, v) for every edge with u < v, in lexicographic order.
  template <class F>
  void for_each_edge(F&& f) const {
    for (std::size_t u = 0; u < n_; ++u) {
      const std::uint64_t* row = &bits_[u * words_];
      std::size_t w = (u + 1) / 64;
      if (w >= words_) continue;
      std::uint64_t word = row[w] & (~std::uint64_t{0} << ((u + 1) % 64));
      for (;;) {
        while (word != 0) {
          const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
          f(u, v);
          word &= word - 1;
        }
        if (++w >= words_) break;
        word = row[w];
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Same vertex count and identical edge sets.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  void set_edge(std::size_t u, std::size_t v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  void finalize();

  friend Graph complement(const Graph& g);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> degrees_;
  std::size_t edges_ = 0;
};

Graph complement(const Graph& g);
Graph complete_graph(std::size_t n);
/// Vertex i adjacent to i +- s (mod n) for every offset s; offsets must lie in 1..n/2.
Graph circulant_graph(std::size_t n, const std::set<std::size_t>& offsets);
/// Vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);
bool is_complete(const Graph& g);

void write_dimacs(std::ostream& out, const Graph& g);

// ---------------------------------------------------------------------------
// Ring graphs

enum class GraphKind { Total, Unit };

const char* to_string(GraphKind kind);

enum class VertexKind : std::uint8_t { ZeroDivisor, Unit };

struct VertexClasses {
  std::vector<VertexKind> kind;
  std::size_t zero_divisors = 0;
  std::size_t units = 0;

  std::vector<std::size_t> vertices_of(VertexKind k) const;
};

VertexClasses classify_vertices(const FiniteRing& ring);

struct RingGraph {
  Graph graph;
  VertexClasses classes;
};

/// x ~ y iff x + y is a zero-divisor (0 included).
RingGraph total_graph(const FiniteRing& ring);
/// x ~ y iff x + y is a unit.
RingGraph unit_graph(const FiniteRing& ring);
RingGraph ring_graph(const FiniteRing& ring, GraphKind kind);

struct DegreePair {
  std::uint64_t zero_divisor = 0;
  std::uint64_t unit = 0;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// Degrees of zero-divisors and units in the total or unit graph, from the
/// order, the unit count and whether 2 is a unit.
DegreePair predicted_degrees(std::uint64_t order, std::uint64_t units, bool two_is_unit, GraphKind kind);
DegreePair predicted_degrees(const FiniteRing& ring, GraphKind kind);
DegreePair predicted_degrees(const LocalRingSpec& spec, GraphKind kind);

EdgePartition edge_partition_of(const Graph& g, const VertexClasses& classes);

}  // namespace sombor
