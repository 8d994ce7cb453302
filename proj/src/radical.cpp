#include "sombor/radical.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sombor/error.hpp"

namespace sombor {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kInt64Min = std::numeric_limits<std::int64_t>::min();

}  // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  *this = reduce(num, den);
}

Rational Rational::reduce(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (num > kInt64Max || num < kInt64Min || den > kInt64Max)
    throw std::overflow_error("rational arithmetic overflowed 64 bits");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const { return reduce(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational::reduce(static_cast<__int128>(a.num_) + b.num_, a.den_);
  return Rational::reduce(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::reduce(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidArgument("rational division by zero");
  return Rational::reduce(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const auto lhs = static_cast<__int128>(a.num_) * b.den_;
  const auto rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------
// Radicals

RadicalForm radical_normalize(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("radical_normalize: m must be positive");
  RadicalForm f{1, 1};
  for (std::uint64_t d = 2; d <= m / d; ++d) {
    std::uint32_t e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    for (std::uint32_t i = 0; i < e / 2; ++i) f.coefficient *= d;
    if (e % 2) f.radicand *= d;
  }
  f.radicand *= m;
  return f;
}

bool is_square_free(std::uint64_t m) { return m >= 1 && radical_normalize(m).coefficient == 1; }

RadicalSum RadicalSum::rational(const Rational& value) {
  RadicalSum r;
  r.add_canonical(1, value);
  return r;
}

RadicalSum RadicalSum::term(const Rational& c, std::uint64_t m) {
  if (m == 0) return {};
  const auto f = radical_normalize(m);
  RadicalSum r;
  r.add_canonical(f.radicand, c * Rational(static_cast<std::int64_t>(f.coefficient)));
  return r;
}

void RadicalSum::add_canonical(std::uint64_t radicand, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(radicand, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalSum::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational() : it->second;
}

RadicalSum RadicalSum::operator-() const {
  RadicalSum r = *this;
  for (auto& [s, c] : r.terms_) c = -c;
  return r;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& b) {
  for (const auto& [s, c] : b.terms_) add_canonical(s, c);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& b) {
  for (const auto& [s, c] : b.terms_) add_canonical(s, -c);
  return *this;
}

RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }

RadicalSum operator*(RadicalSum a, const Rational& k) {
  if (k.is_zero()) return {};
  for (auto& [s, c] : a.terms_) c *= k;
  return a;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  // sqrt(s1)*sqrt(s2) = g*sqrt((s1/g)*(s2/g)), g = gcd(s1, s2); the product
  // of two coprime square-free numbers is square-free.
  RadicalSum r;
  for (const auto& [s1, c1] : a.terms_) {
    for (const auto& [s2, c2] : b.terms_) {
      const auto g = std::gcd(s1, s2);
      const auto x = s1 / g;
      const auto y = s2 / g;
      if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / y)
        throw std::overflow_error("radical product overflowed");
      r.add_canonical(x * y, c1 * c2 * Rational(static_cast<std::int64_t>(g)));
    }
  }
  return r;
}

double RadicalSum::to_double() const {
  double sum = 0.0;
  for (const auto& [s, c] : terms_) sum += c.to_double() * std::sqrt(static_cast<double>(s));
  return sum;
}

long double RadicalSum::to_long_double() const {
  long double sum = 0.0L;
  for (const auto& [s, c] : terms_) sum += c.to_long_double() * std::sqrt(static_cast<long double>(s));
  return sum;
}

RadicalSum radical_scale(const RadicalSum& a, const Rational& k) { return a * k; }
RadicalSum radical_add(const RadicalSum& a, const RadicalSum& b) { return a + b; }
bool radical_eq(const RadicalSum& a, const RadicalSum& b) { return a == b; }
double to_float(const RadicalSum& a) { return a.to_double(); }

std::optional<RadicalSum> exact_sqrt(const RadicalSum& a) {
  if (!a.is_rational()) return std::nullopt;
  const auto v = a.rational_part();
  if (v.num() < 0) return std::nullopt;
  if (v.is_zero()) return RadicalSum();
  // sqrt(a/b) = sqrt(a*b)/b
  const auto prod = static_cast<unsigned __int128>(v.num()) * static_cast<unsigned __int128>(v.den());
  if (prod > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("exact_sqrt overflowed");
  return RadicalSum::term(Rational(1, v.den()), static_cast<std::uint64_t>(prod));
}

}  // namespace sombor
