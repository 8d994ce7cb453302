#include "sombor/ring.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "sombor/error.hpp"

namespace sombor {

namespace {

std::vector<PrimePower> trial_division(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    PrimePower pp{d, 0};
    while (n % d == 0) {
      n /= d;
      ++pp.exponent;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

}  // namespace

Modulus::Modulus(std::uint64_t n) : n_(n) {
  if (n < 2) throw InvalidArgument("modulus must be at least 2, got " + std::to_string(n));
  factors_ = trial_division(n);
}

Modulus factorize(std::uint64_t n) { return Modulus(n); }

std::uint64_t euler_phi(const Modulus& n) {
  std::uint64_t phi = n.value();
  for (const auto& f : n.factors()) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("euler_phi: n must be positive");
  if (n == 1) return 1;
  return euler_phi(Modulus(n));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = trial_division(n);
  return f.size() == 1 && f[0].exponent == 1;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("checked_pow: overflow");
    r *= base;
  }
  return r;
}

ModulusFamily classify(const Modulus& n) {
  ModulusFamily fam;
  if (n.value() % 2 == 0) {
    fam.tag = Family::Even;
    return fam;
  }
  auto f = n.factors();
  if (f.size() == 1) {
    fam.tag = Family::OddPrimePower;
    fam.p = f[0].prime;
    fam.alpha = f[0].exponent;
  } else if (f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1) {
    fam.tag = Family::OddPQ;
    fam.p = f[0].prime;
    fam.q = f[1].prime;
  } else if (f.size() == 2 && f[0].exponent + f[1].exponent == 3 &&
             (f[0].exponent == 2 || f[1].exponent == 2)) {
    fam.tag = Family::OddPSquaredQ;
    const bool first_squared = f[0].exponent == 2;
    fam.p = first_squared ? f[0].prime : f[1].prime;
    fam.q = first_squared ? f[1].prime : f[0].prime;
    fam.out_of_hypothesis = fam.p > fam.q;
  }
  return fam;
}

std::string family_tag(const ModulusFamily& family) {
  switch (family.tag) {
    case Family::Even: return "even";
    case Family::OddPrimePower: return "pp";
    case Family::OddPQ: return "pq";
    case Family::OddPSquaredQ: return family.out_of_hypothesis ? "p2q-ext" : "p2q";
    case Family::OtherOdd: return "other";
  }
  return "other";
}

// ---------------------------------------------------------------------------
// FiniteRing

FiniteRing::FiniteRing(RingKind kind, std::uint64_t order, Modulus modulus, std::uint64_t prime,
                       std::uint32_t exponent)
    : kind_(kind), order_(order), modulus_(std::move(modulus)), prime_(prime), exponent_(exponent) {
  if (kind_ == RingKind::TruncatedPoly) lead_place_ = checked_pow(prime_, exponent_ - 1);
}

FiniteRing FiniteRing::integers_mod(std::uint64_t n) {
  Modulus m(n);
  return FiniteRing(RingKind::Zn, n, std::move(m), 0, 0);
}

FiniteRing FiniteRing::prime_power(std::uint64_t p, std::uint32_t alpha) {
  if (!is_prime(p)) throw InvalidArgument("Z_{p^a}: p = " + std::to_string(p) + " is not prime");
  if (alpha < 1) throw InvalidArgument("Z_{p^a}: exponent must be at least 1");
  const auto n = checked_pow(p, alpha);
  return FiniteRing(RingKind::ZPrimePower, n, Modulus(n), p, alpha);
}

FiniteRing FiniteRing::truncated_poly(std::uint64_t p, std::uint32_t k) {
  if (!is_prime(p)) throw InvalidArgument("F_p[x]/(x^k): p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("F_p[x]/(x^k): k must be at least 1");
  const auto n = checked_pow(p, k);
  return FiniteRing(RingKind::TruncatedPoly, n, Modulus(n), p, k);
}

FiniteRing::Element FiniteRing::one() const {
  return kind_ == RingKind::TruncatedPoly ? lead_place_ : 1;
}

FiniteRing::Element FiniteRing::add(Element x, Element y) const {
  if (kind_ != RingKind::TruncatedPoly) {
    const auto s = x + y;
    return s >= order_ ? s - order_ : s;
  }
  Element out = 0;
  Element place = 1;
  for (std::uint32_t i = 0; i < exponent_; ++i) {
    const auto d = (x % prime_ + y % prime_) % prime_;
    out += d * place;
    x /= prime_;
    y /= prime_;
    place *= prime_;
  }
  return out;
}

FiniteRing::Element FiniteRing::negate(Element x) const {
  if (kind_ != RingKind::TruncatedPoly) return x == 0 ? 0 : order_ - x;
  Element out = 0;
  Element place = 1;
  for (std::uint32_t i = 0; i < exponent_; ++i) {
    const auto d = x % prime_;
    out += ((prime_ - d) % prime_) * place;
    x /= prime_;
    place *= prime_;
  }
  return out;
}

FiniteRing::Element FiniteRing::multiply(Element x, Element y) const {
  if (kind_ != RingKind::TruncatedPoly) {
    return static_cast<Element>((static_cast<unsigned __int128>(x) * y) % order_);
  }
  const auto a = coefficients(x);
  const auto b = coefficients(y);
  std::vector<std::uint64_t> c(exponent_, 0);
  for (std::uint32_t i = 0; i < exponent_; ++i)
    for (std::uint32_t j = 0; i + j < exponent_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % prime_;
  return from_coefficients(c);
}

bool FiniteRing::is_unit(Element x) const {
  if (kind_ == RingKind::TruncatedPoly) return x >= lead_place_;
  return std::gcd(x, order_) == 1;
}

std::vector<std::uint64_t> FiniteRing::coefficients(Element x) const {
  if (kind_ != RingKind::TruncatedPoly) return {x};
  std::vector<std::uint64_t> out(exponent_);
  for (std::uint32_t i = exponent_; i-- > 0;) {
    out[i] = x % prime_;
    x /= prime_;
  }
  return out;
}

FiniteRing::Element FiniteRing::from_coefficients(std::span<const std::uint64_t> coeffs) const {
  if (kind_ != RingKind::TruncatedPoly) {
    if (coeffs.size() != 1 || coeffs[0] >= order_) throw InvalidArgument("not an element of " + name());
    return coeffs[0];
  }
  if (coeffs.size() != exponent_) throw InvalidArgument("expected " + std::to_string(exponent_) + " coefficients");
  Element x = 0;
  for (auto c : coeffs) {
    if (c >= prime_) throw InvalidArgument("coefficient out of range for " + name());
    x = x * prime_ + c;
  }
  return x;
}

std::string FiniteRing::name() const {
  if (kind_ == RingKind::TruncatedPoly)
    return "F_" + std::to_string(prime_) + "[x]/(x^" + std::to_string(exponent_) + ")";
  return "Z_" + std::to_string(order_);
}

std::string FiniteRing::element_name(Element x) const {
  if (kind_ != RingKind::TruncatedPoly) return std::to_string(x);
  const auto c = coefficients(x);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

bool FiniteRing::is_local() const {
  return kind_ != RingKind::Zn || modulus_.is_prime_power();
}

bool is_unit(FiniteRing::Element x, const FiniteRing& ring) { return ring.is_unit(x); }

std::uint64_t unit_count(const FiniteRing& ring) {
  if (ring.kind() == RingKind::TruncatedPoly) {
    const auto n = ring.order();
    return n - n / ring.prime();
  }
  return euler_phi(ring.modulus());
}

LocalRingSpec LocalRingSpec::make(std::uint64_t order, std::uint64_t units, bool two_is_unit) {
  if (units < 1 || units >= order)
    throw InvalidArgument("local ring spec: need 1 <= |U| < n (n=" + std::to_string(order) +
                          ", |U|=" + std::to_string(units) + ")");
  if (order % (order - units) != 0)
    throw InvalidArgument("local ring spec: maximal ideal size " + std::to_string(order - units) +
                          " does not divide " + std::to_string(order));
  return LocalRingSpec{order, units, two_is_unit};
}

LocalRingSpec to_local_spec(const FiniteRing& ring) {
  if (!ring.is_local()) throw NonLocalRing(ring.name() + " is not a local ring");
  const auto two = ring.add(ring.one(), ring.one());
  return LocalRingSpec::make(ring.order(), unit_count(ring), ring.is_unit(two));
}

}  // namespace sombor
