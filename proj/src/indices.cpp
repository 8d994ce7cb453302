#include "sombor/indices.hpp"

#include <cmath>
#include <vector>

#include "sombor/error.hpp"

namespace sombor {

DegreePairCounts degree_pair_counts(const Graph& g) {
  DegreePairCounts counts;
  const auto deg = g.degrees();
  // Per-row tally keyed by neighbor degree; ring graphs have very few
  // distinct degrees, so a linear scan beats a map lookup per edge.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> row;
  std::size_t current = g.vertex_count();
  auto flush = [&] {
    if (current == g.vertex_count()) return;
    for (auto [dv, c] : row) {
      const auto du = deg[current];
      counts[{std::min(du, dv), std::max(du, dv)}] += c;
    }
    row.clear();
  };
  g.for_each_edge([&](std::size_t u, std::size_t v) {
    if (u != current) {
      flush();
      current = u;
    }
    const auto dv = deg[v];
    for (auto& [d, c] : row) {
      if (d == dv) {
        ++c;
        return;
      }
    }
    row.emplace_back(dv, 1);
  });
  flush();
  return counts;
}

RadicalSum sombor_bruteforce(const Graph& g) {
  RadicalSum sum;
  for (const auto& [pair, count] : degree_pair_counts(g)) {
    const auto [a, b] = pair;
    sum += RadicalSum::term(Rational(static_cast<std::int64_t>(count)), a * a + b * b);
  }
  return sum;
}

DegreeFunction DegreeFunction::sombor() {
  return {"sombor",
          [](std::uint64_t x, std::uint64_t y) {
            return std::sqrt(static_cast<double>(x) * static_cast<double>(x) +
                             static_cast<double>(y) * static_cast<double>(y));
          },
          true};
}

DegreeFunction DegreeFunction::first_zagreb() {
  return {"first_zagreb", [](std::uint64_t x, std::uint64_t y) { return static_cast<double>(x + y); }, false};
}

DegreeFunction DegreeFunction::second_zagreb() {
  return {"second_zagreb", [](std::uint64_t x, std::uint64_t y) { return static_cast<double>(x * y); }, false};
}

double degree_index_bruteforce(const Graph& g, const DegreeFunction& h) {
  double sum = 0.0;
  for (const auto& [pair, count] : degree_pair_counts(g)) {
    const auto [a, b] = pair;
    const double hab = h.value(a, b);
    if (hab != h.value(b, a))
      throw InvalidArgument("degree function '" + h.name + "' is not symmetric at (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
    sum += static_cast<double>(count) * hab;
  }
  return sum;
}

}  // namespace sombor
