#pragma once

/**
 * @file radical.hpp
 * @brief Exact values of the form sum_i c_i * sqrt(s_i).
 *
 * Coefficients are rationals, radicands are square-free positive integers.
 * Since square roots of distinct square-free integers are linearly
 * independent over Q, the canonical term map is unique per value and
 * equality is plain map equality.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace sombor {

/// int64 rational in lowest terms with positive denominator.
/// Arithmetic goes through 128-bit intermediates and throws std::overflow_error
/// when a reduced result no longer fits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  /// "7", "-3/2"
  std::string to_string() const;

 private:
  static Rational reduce(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// sqrt(m) == coefficient * sqrt(radicand) with radicand square-free.
struct RadicalForm {
  std::uint64_t coefficient = 1;
  std::uint64_t radicand = 1;

  friend bool operator==(const RadicalForm&, const RadicalForm&) = default;
};

RadicalForm radical_normalize(std::uint64_t m);

bool is_square_free(std::uint64_t m);

class RadicalSum {
 public:
  using TermMap = std::map<std::uint64_t, Rational>;

  RadicalSum() = default;

  static RadicalSum rational(const Rational& value);
  /// c * sqrt(m); m need not be square-free, and m == 0 gives zero.
  static RadicalSum term(const Rational& c, std::uint64_t m);
  static RadicalSum sqrt(std::uint64_t m) { return term(1, m); }

  /// Radicand -> coefficient; keys square-free, coefficients nonzero.
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the value is rational (only a radicand-1 term, or zero).
  bool is_rational() const;
  /// The radicand-1 coefficient.
  Rational rational_part() const;

  RadicalSum operator-() const;
  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b);
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b);
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);
  friend RadicalSum operator*(RadicalSum a, const Rational& k);
  friend RadicalSum operator*(const Rational& k, RadicalSum a) { return std::move(a) * k; }
  RadicalSum& operator+=(const RadicalSum& b);
  RadicalSum& operator-=(const RadicalSum& b);

  friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

  /// Double evaluation. Each term costs one sqrt and one multiply-add, so the
  /// absolute error is at most about 4 ulp per term of the largest magnitude.
  double to_double() const;
  long double to_long_double() const;

 private:
  void add_canonical(std::uint64_t radicand, const Rational& c);

  TermMap terms_;
};

RadicalSum radical_scale(const RadicalSum& a, const Rational& k);
RadicalSum radical_add(const RadicalSum& a, const RadicalSum& b);
bool radical_eq(const RadicalSum& a, const RadicalSum& b);
double to_float(const RadicalSum& a);

/// Square root of a non-negative rational value, as c*sqrt(s).
/// Returns nullopt when the argument is irrational or negative.
std::optional<RadicalSum> exact_sqrt(const RadicalSum& a);

}  // namespace sombor
