#pragma once

#include <cstdint>
#include <string>

namespace sombor {

/// Edge counts by endpoint class: alpha = zero-divisor/zero-divisor,
/// beta = zero-divisor/unit, gamma = unit/unit.
///
/// Signed so that a closed form with a wrong edge total can still be
/// represented; `consistent()` reports whether the invariants hold.
struct EdgePartition {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t total = 0;

  /// gamma := total - alpha - beta
  static EdgePartition from_total(std::int64_t alpha, std::int64_t beta, std::int64_t total) {
    return {alpha, beta, total - alpha - beta, total};
  }

  bool consistent() const {
    return alpha >= 0 && beta >= 0 && gamma >= 0 && alpha + beta + gamma == total;
  }

  std::string to_string() const {
    return "(alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta) +
           ", gamma=" + std::to_string(gamma) + ", edges=" + std::to_string(total) + ")";
  }

  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

}  // namespace sombor
