#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "sombor/graph.hpp"
#include "sombor/radical.hpp"

namespace sombor {

/// Number of edges per unordered degree pair (min, max).
using DegreePairCounts = std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>;

DegreePairCounts degree_pair_counts(const Graph& g);

/// Exact sum over all edges uv of sqrt(d_u^2 + d_v^2).
RadicalSum sombor_bruteforce(const Graph& g);

/// A symmetric edge weight H(d_u, d_v) for generic degree-based indices.
struct DegreeFunction {
  std::string name;
  std::function<double(std::uint64_t, std::uint64_t)> value;
  bool exact_radical = false;  // has an exact RadicalSum counterpart

  static DegreeFunction sombor();
  static DegreeFunction first_zagreb();   // x + y
  static DegreeFunction second_zagreb();  // x * y
};

/// Float sum of H(d_u, d_v) over edges. Throws InvalidArgument if H turns
/// out to be asymmetric on a degree pair that occurs in the graph.
double degree_index_bruteforce(const Graph& g, const DegreeFunction& h);

}  // namespace sombor
