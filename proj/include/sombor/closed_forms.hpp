#pragma once

/**
 * @file closed_forms.hpp
 * @brief O(1) Sombor index formulas for total and unit graphs.
 *
 * Families: Z_n for n even, n = p^a, n = pq, n = p^2 q (p, q odd primes),
 * arbitrary finite local rings, and k-regular graphs with their complements.
 *
 * Three published statements disagree with brute-force enumeration. Each of
 * them is available both as printed (FormulaVariant::AsPrinted) and in the
 * form forced by the degree counts and the handshake lemma
 * (FormulaVariant::Corrected):
 *  - so_unit_prime_power: the unit/unit edge count in the second term
 *  - unit_p2q_partition / so_unit_p2q: the total edge count |E|
 *  - so_unit_local when 2 is a unit
 *
 * All functions throw OffFamily when their parameters are outside the family
 * they describe (non-prime p, even p, p >= q where p < q is required, ...).
 */

#include <cstdint>

#include "sombor/edge_partition.hpp"
#include "sombor/graph.hpp"
#include "sombor/radical.hpp"
#include "sombor/ring.hpp"

namespace sombor {

enum class FormulaVariant { AsPrinted, Corrected };

const char* to_string(FormulaVariant v);

/// sqrt(2)*alpha*d_Z + beta*sqrt(d_Z^2 + d_U^2) + sqrt(2)*gamma*d_U
RadicalSum assemble_sombor(const EdgePartition& partition, const DegreePair& degrees);

// Total graph of Z_n
RadicalSum so_total_even(std::uint64_t n);
RadicalSum so_total_prime_power(std::uint64_t p, std::uint32_t alpha);
EdgePartition total_pq_partition(std::uint64_t p, std::uint64_t q);
RadicalSum so_total_pq(std::uint64_t p, std::uint64_t q);
/// p is the squared prime. p > q is accepted (outside the usual hypothesis).
EdgePartition total_p2q_partition(std::uint64_t p, std::uint64_t q);
RadicalSum so_total_p2q(std::uint64_t p, std::uint64_t q);

// Unit graph of Z_n
RadicalSum so_unit_even(std::uint64_t n);
RadicalSum so_unit_prime_power(std::uint64_t p, std::uint32_t alpha,
                               FormulaVariant variant = FormulaVariant::Corrected);
EdgePartition unit_pq_partition(std::uint64_t p, std::uint64_t q);
RadicalSum so_unit_pq(std::uint64_t p, std::uint64_t q);
EdgePartition unit_p2q_partition(std::uint64_t p, std::uint64_t q,
                                 FormulaVariant variant = FormulaVariant::Corrected);
RadicalSum so_unit_p2q(std::uint64_t p, std::uint64_t q, FormulaVariant variant = FormulaVariant::Corrected);

// Finite local rings
RadicalSum so_total_local(const LocalRingSpec& spec);
RadicalSum so_unit_local(const LocalRingSpec& spec, FormulaVariant variant = FormulaVariant::Corrected);

// Regular graphs
RadicalSum so_regular(std::uint64_t n, std::uint64_t k);
RadicalSum so_complete(std::uint64_t n);

/// SO(K_n) - (SO(G) + SO(G') + 2*sqrt(SO(G)*SO(G'))) for a k-regular G on n
/// vertices and its complement G'; exactly zero when
/// SO(K_n) = (sqrt(SO(G)) + sqrt(SO(G')))^2. Requires n*k even and k < n.
RadicalSum complement_identity_residual(std::uint64_t n, std::uint64_t k);

}  // namespace sombor
