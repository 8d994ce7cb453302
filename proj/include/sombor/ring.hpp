#pragma once

/**
 * @file ring.hpp
 * @brief Number-theoretic helpers and small finite commutative rings.
 *
 * Three concrete rings are supported, all enumerable with elements indexed
 * 0..order-1:
 *  - Z_n                    residues in natural order
 *  - Z_{p^a}                same as Z_n, but tagged as a local ring
 *  - F_p[x]/(x^k)           coefficient vectors (a0, ..., a_{k-1}) in
 *                           lexicographic order, a0 most significant
 *
 * The zero-divisor set is taken to be R \ U(R), so 0 counts as a zero-divisor.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sombor {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An integer n >= 2 together with its prime factorization (primes ascending).
class Modulus {
 public:
  explicit Modulus(std::uint64_t n);

  std::uint64_t value() const { return n_; }
  std::span<const PrimePower> factors() const { return factors_; }
  bool is_prime_power() const { return factors_.size() == 1; }

 private:
  std::uint64_t n_;
  std::vector<PrimePower> factors_;
};

/// Trial division; rejects n < 2.
Modulus factorize(std::uint64_t n);

/// Multiplicative formula over the factorization. euler_phi(1) == 1.
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const Modulus& n);

bool is_prime(std::uint64_t n);

/// base^exp, throws std::overflow_error if the result exceeds 64 bits.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

enum class Family { Even, OddPrimePower, OddPQ, OddPSquaredQ, OtherOdd };

/// Which closed-form family a modulus belongs to.
///
/// For OddPrimePower, `p` and `alpha` are set. For OddPQ, p < q. For
/// OddPSquaredQ, `p` is the squared prime and `q` the other one; when p > q
/// the modulus lies outside the usual p < q hypothesis and
/// `out_of_hypothesis` is set.
struct ModulusFamily {
  Family tag = Family::OtherOdd;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint32_t alpha = 0;
  bool out_of_hypothesis = false;

  friend bool operator==(const ModulusFamily&, const ModulusFamily&) = default;
};

ModulusFamily classify(const Modulus& n);

/// Short tag used in reports: even, pp, pq, p2q, p2q-ext, other.
std::string family_tag(const ModulusFamily& family);

enum class RingKind { Zn, ZPrimePower, TruncatedPoly };

class FiniteRing {
 public:
  using Element = std::uint64_t;

  static FiniteRing integers_mod(std::uint64_t n);
  static FiniteRing prime_power(std::uint64_t p, std::uint32_t alpha);
  /// F_p[x]/(x^k); k == 1 gives the prime field F_p.
  static FiniteRing truncated_poly(std::uint64_t p, std::uint32_t k);

  RingKind kind() const { return kind_; }
  std::uint64_t order() const { return order_; }
  /// For Z_n, the factorization of n; for the local kinds, p^alpha or p^k.
  const Modulus& modulus() const { return modulus_; }
  /// The prime p for ZPrimePower and TruncatedPoly; 0 for Zn.
  std::uint64_t prime() const { return prime_; }
  /// alpha for ZPrimePower, k for TruncatedPoly; 0 for Zn.
  std::uint32_t exponent() const { return exponent_; }

  Element zero() const { return 0; }
  Element one() const;
  Element add(Element x, Element y) const;
  Element negate(Element x) const;
  Element multiply(Element x, Element y) const;
  bool is_unit(Element x) const;

  /// Coefficients (a0, ..., a_{k-1}) of a truncated-polynomial element.
  std::vector<std::uint64_t> coefficients(Element x) const;
  Element from_coefficients(std::span<const std::uint64_t> coeffs) const;

  /// "Z_15", "F_3[x]/(x^2)"
  std::string name() const;
  std::string element_name(Element x) const;

  /// True for Z_n only when n is a prime power; always true for the local kinds.
  bool is_local() const;

 private:
  FiniteRing(RingKind kind, std::uint64_t order, Modulus modulus, std::uint64_t prime,
             std::uint32_t exponent);

  RingKind kind_;
  std::uint64_t order_;
  Modulus modulus_;
  std::uint64_t prime_;
  std::uint32_t exponent_;
  std::uint64_t lead_place_ = 1;  // p^(k-1) for TruncatedPoly
};

bool is_unit(FiniteRing::Element x, const FiniteRing& ring);
std::uint64_t unit_count(const FiniteRing& ring);

/// The three numbers the local-ring Sombor formulas depend on.
struct LocalRingSpec {
  std::uint64_t order = 0;
  std::uint64_t unit_count = 0;
  bool two_is_unit = false;

  /// Validates 1 <= unit_count < order and (order - unit_count) | order.
  static LocalRingSpec make(std::uint64_t order, std::uint64_t unit_count, bool two_is_unit);

  std::uint64_t non_unit_count() const { return order - unit_count; }

  friend bool operator==(const LocalRingSpec&, const LocalRingSpec&) = default;
};

/// Throws NonLocalRing for Z_n with two or more distinct prime factors.
LocalRingSpec to_local_spec(const FiniteRing& ring);

}  // namespace sombor
