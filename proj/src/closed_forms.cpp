#include "sombor/closed_forms.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "sombor/error.hpp"

namespace sombor {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("closed form overflowed 64 bits");
  return static_cast<std::int64_t>(v);
}

// x / sqrt(2) == (x/2) * sqrt(2)
RadicalSum over_sqrt2(i128 x) { return RadicalSum::term(Rational(narrow(x), 2), 2); }

RadicalSum times_sqrt(i128 c, i128 radicand) {
  if (c == 0) return {};
  if (radicand < 0) throw std::logic_error("negative radicand");
  return RadicalSum::term(Rational(narrow(c)), static_cast<std::uint64_t>(narrow(radicand)));
}

void require_odd_prime(std::uint64_t p, const char* what) {
  if (p == 2 || !is_prime(p))
    throw OffFamily(std::string(what) + ": " + std::to_string(p) + " is not an odd prime");
}

void require_pq(std::uint64_t p, std::uint64_t q, const char* what) {
  require_odd_prime(p, what);
  require_odd_prime(q, what);
  if (p >= q) throw OffFamily(std::string(what) + ": need p < q, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
}

void require_p2q(std::uint64_t p, std::uint64_t q, const char* what) {
  require_odd_prime(p, what);
  require_odd_prime(q, what);
  if (p == q) throw OffFamily(std::string(what) + ": p and q must be distinct");
}

}  // namespace

const char* to_string(FormulaVariant v) { return v == FormulaVariant::AsPrinted ? "printed" : "corrected"; }

RadicalSum assemble_sombor(const EdgePartition& partition, const DegreePair& degrees) {
  const i128 dz = degrees.zero_divisor;
  const i128 du = degrees.unit;
  RadicalSum so = times_sqrt(static_cast<i128>(partition.alpha) * dz, 2);
  so += times_sqrt(partition.beta, dz * dz + du * du);
  so += times_sqrt(static_cast<i128>(partition.gamma) * du, 2);
  return so;
}

// ---------------------------------------------------------------------------
// Total graph

RadicalSum so_total_even(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) throw OffFamily("so_total_even: n must be even and at least 2, got " + std::to_string(n));
  const i128 d = static_cast<i128>(n) - euler_phi(n) - 1;
  return over_sqrt2(static_cast<i128>(n) * d * d);
}

RadicalSum so_total_prime_power(std::uint64_t p, std::uint32_t alpha) {
  require_odd_prime(p, "so_total_prime_power");
  if (alpha < 1) throw OffFamily("so_total_prime_power: exponent must be at least 1");
  const i128 n = checked_pow(p, alpha);
  const i128 phi = euler_phi(static_cast<std::uint64_t>(n));
  const i128 m = n - phi;
  return over_sqrt2(phi * m * m) + over_sqrt2((m - 1) * (m - 1) * m);
}

EdgePartition total_pq_partition(std::uint64_t p, std::uint64_t q) {
  require_pq(p, q, "total_pq_partition");
  const i128 P = p;
  const i128 Q = q;
  return EdgePartition::from_total(narrow((P * (P - 1) + Q * (Q - 1)) / 2), narrow(2 * (P - 1) * (Q - 1)),
                                   narrow((P * Q - 1) * (P + Q - 1) / 2));
}

RadicalSum so_total_pq(std::uint64_t p, std::uint64_t q) {
  const auto part = total_pq_partition(p, q);
  const auto n = p * q;
  return assemble_sombor(part, predicted_degrees(n, (p - 1) * (q - 1), true, GraphKind::Total));
}

EdgePartition total_p2q_partition(std::uint64_t p, std::uint64_t q) {
  require_p2q(p, q, "total_p2q_partition");
  const i128 P = p;
  const i128 Q = q;
  const i128 alpha = P * (Q - 1) * (P * (Q - 1) - 1) / 2 + P * (P - 1) * (P * (P - 1) - 1) / 2 + P * (P - 1) / 2 +
                     P * P * (Q - 1) + P * P * (P - 1);
  const i128 beta = 2 * P * P * (P - 1) * (Q - 1);
  const i128 total = P * (P + Q - 1) * (P * P * Q - 1) / 2;
  return EdgePartition::from_total(narrow(alpha), narrow(beta), narrow(total));
}

RadicalSum so_total_p2q(std::uint64_t p, std::uint64_t q) {
  const auto part = total_p2q_partition(p, q);
  const auto n = p * p * q;
  return assemble_sombor(part, predicted_degrees(n, p * (p - 1) * (q - 1), true, GraphKind::Total));
}

// ---------------------------------------------------------------------------
// Unit graph

RadicalSum so_unit_even(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) throw OffFamily("so_unit_even: n must be even and at least 2, got " + std::to_string(n));
  const i128 phi = euler_phi(n);
  return over_sqrt2(static_cast<i128>(n) * phi * phi);
}

RadicalSum so_unit_prime_power(std::uint64_t p, std::uint32_t alpha, FormulaVariant variant) {
  require_odd_prime(p, "so_unit_prime_power");
  if (alpha < 1) throw OffFamily("so_unit_prime_power: exponent must be at least 1");
  const i128 n = checked_pow(p, alpha);
  const i128 phi = euler_phi(static_cast<std::uint64_t>(n));
  const i128 m = n - phi;
  // Twice the number of unit/unit edges. The printed statement subtracts m
  // where the handshake count subtracts m*phi.
  const i128 bracket = variant == FormulaVariant::AsPrinted ? phi * (phi - 1) - m : phi * (phi - 1) - m * phi;
  return times_sqrt(phi * m, phi * phi + (phi - 1) * (phi - 1)) + over_sqrt2(bracket * (phi - 1));
}

EdgePartition unit_pq_partition(std::uint64_t p, std::uint64_t q) {
  require_pq(p, q, "unit_pq_partition");
  const i128 P = p;
  const i128 Q = q;
  const i128 phi = (P - 1) * (Q - 1);
  return EdgePartition::from_total(narrow(phi), narrow(phi * (P + Q - 3)), narrow((P * Q - 1) * phi / 2));
}

RadicalSum so_unit_pq(std::uint64_t p, std::uint64_t q) {
  const auto part = unit_pq_partition(p, q);
  return assemble_sombor(part, predicted_degrees(p * q, (p - 1) * (q - 1), true, GraphKind::Unit));
}

EdgePartition unit_p2q_partition(std::uint64_t p, std::uint64_t q, FormulaVariant variant) {
  require_p2q(p, q, "unit_p2q_partition");
  const i128 P = p;
  const i128 Q = q;
  const i128 alpha = P * P * (P - 1) * (Q - 1);
  const i128 beta = alpha * (P + Q - 3);
  // The printed edge count carries p^2 where phi(p^2 q) = p(p-1)(q-1) belongs.
  const i128 lead = variant == FormulaVariant::AsPrinted ? P * P : P;
  const i128 total = lead * (P - 1) * (Q - 1) * (P * P * Q - 1) / 2;
  return EdgePartition::from_total(narrow(alpha), narrow(beta), narrow(total));
}

RadicalSum so_unit_p2q(std::uint64_t p, std::uint64_t q, FormulaVariant variant) {
  const auto part = unit_p2q_partition(p, q, variant);
  return assemble_sombor(part, predicted_degrees(p * p * q, p * (p - 1) * (q - 1), true, GraphKind::Unit));
}

// ---------------------------------------------------------------------------
// Local rings

RadicalSum so_total_local(const LocalRingSpec& spec) {
  const auto s = LocalRingSpec::make(spec.order, spec.unit_count, spec.two_is_unit);
  const i128 n = s.order;
  const i128 u = s.unit_count;
  const i128 m = n - u;
  if (!s.two_is_unit) return over_sqrt2(n * (m - 1) * (m - 1));
  return over_sqrt2(m * (m - 1) * (m - 1)) + over_sqrt2(u * m * m);
}

RadicalSum so_unit_local(const LocalRingSpec& spec, FormulaVariant variant) {
  const auto s = LocalRingSpec::make(spec.order, spec.unit_count, spec.two_is_unit);
  const i128 n = s.order;
  const i128 u = s.unit_count;
  const i128 m = n - u;
  if (!s.two_is_unit) return over_sqrt2(n * u * u);
  if (variant == FormulaVariant::AsPrinted) return times_sqrt(u * m, u * u + m * m);
  // Non-units have degree u and see every unit; units have degree u - 1.
  return times_sqrt(u * m, u * u + (u - 1) * (u - 1)) + over_sqrt2((u * (u - 1) - m * u) * (u - 1));
}

// ---------------------------------------------------------------------------
// Regular graphs

RadicalSum so_regular(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k >= n)
    throw InvalidArgument("so_regular: need 0 <= k <= n-1, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  return over_sqrt2(static_cast<i128>(n) * k * k);
}

RadicalSum so_complete(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("so_complete: n must be positive");
  return so_regular(n, n - 1);
}

RadicalSum complement_identity_residual(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k >= n || (n * k) % 2 != 0)
    throw OffFamily("no " + std::to_string(k) + "-regular graph on " + std::to_string(n) + " vertices");
  const auto so_g = so_regular(n, k);
  const auto so_gbar = so_regular(n, n - k - 1);
  const auto cross = exact_sqrt(so_g * so_gbar);
  if (!cross) throw std::logic_error("SO(G)*SO(G') is not a non-negative rational");
  return so_complete(n) - (so_g + so_gbar + *cross * Rational(2));
}

}  // namespace sombor
