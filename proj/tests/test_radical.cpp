#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "sombor/error.hpp"
#include "sombor/radical.hpp"
#include "sombor/radical_text.hpp"

using namespace sombor;

namespace {

RadicalSum random_sum(std::mt19937_64& rng, int max_terms = 4) {
  static constexpr std::uint64_t kRadicands[] = {1, 2, 3, 5, 6, 7, 10, 13, 17, 61, 85, 113, 12, 50, 98};
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<std::int64_t> num(-500, 500);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kRadicands) - 1);
  RadicalSum s;
  for (int i = terms(rng); i > 0; --i) s += RadicalSum::term(Rational(num(rng), den(rng)), kRadicands[pick(rng)]);
  return s;
}

}  // namespace

TEST(Rational, LowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(14, 2).to_string(), "7");
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

TEST(Rational, Overflow) {
  const Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(RadicalNormalize, AgreesWithSquareScan) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000);
  for (int i = 0; i < 5000; ++i) {
    const auto m = dist(rng);
    const auto f = radical_normalize(m);
    const auto [c, s] = oracle::reduce_sqrt(m);
    ASSERT_EQ(f.coefficient * f.coefficient * f.radicand, m);
    ASSERT_TRUE(is_square_free(f.radicand)) << m;
    ASSERT_EQ(f.coefficient, static_cast<std::uint64_t>(c)) << m;
    ASSERT_EQ(f.radicand, s) << m;
  }
}

TEST(RadicalNormalize, Edges) {
  EXPECT_EQ(radical_normalize(1), (RadicalForm{1, 1}));
  EXPECT_EQ(radical_normalize(72), (RadicalForm{6, 2}));
  EXPECT_EQ(radical_normalize(8), (RadicalForm{2, 2}));
  EXPECT_TRUE(RadicalSum::sqrt(0).is_zero());
}

TEST(RadicalSum, Canonical) {
  EXPECT_EQ(RadicalSum::sqrt(8), RadicalSum::term(2, 2));
  EXPECT_EQ(RadicalSum::sqrt(9), RadicalSum::rational(3));
  EXPECT_TRUE((RadicalSum::sqrt(2) - RadicalSum::term(1, 2)).is_zero());
  EXPECT_TRUE(RadicalSum::rational(Rational(5, 3)).is_rational());
  EXPECT_FALSE(RadicalSum::sqrt(5).is_rational());
}

TEST(RadicalSum, Products) {
  EXPECT_EQ(RadicalSum::sqrt(2) * RadicalSum::sqrt(2), RadicalSum::rational(2));
  EXPECT_EQ(RadicalSum::sqrt(6) * RadicalSum::sqrt(10), RadicalSum::term(2, 15));
  const auto a = RadicalSum::rational(1) + RadicalSum::sqrt(2);
  const auto b = RadicalSum::rational(1) - RadicalSum::sqrt(2);
  EXPECT_EQ(a * b, RadicalSum::rational(-1));
}

TEST(RadicalSum, RingAxiomsFuzz) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_sum(rng, 3);
    const auto b = random_sum(rng, 3);
    const auto c = random_sum(rng, 3);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(radical_add(a, b), a + b);
    ASSERT_TRUE(radical_eq(radical_scale(a, 2), a + a));
    ASSERT_NEAR(to_float(a + b), a.to_double() + b.to_double(), 1e-7);
  }
}

TEST(RadicalSum, FloatAgreesWithTerms) {
  const auto s = RadicalSum::term(218, 2) + RadicalSum::term(16, 85);
  EXPECT_NEAR(s.to_double(), 218 * std::sqrt(2.0) + 16 * std::sqrt(85.0), 1e-9);
}

TEST(ExactSqrt, RationalSquares) {
  EXPECT_EQ(*exact_sqrt(RadicalSum::rational(Rational(9, 4))), RadicalSum::rational(Rational(3, 2)));
  EXPECT_EQ(*exact_sqrt(RadicalSum::rational(Rational(1, 2))), RadicalSum::term(Rational(1, 2), 2));
  EXPECT_EQ(*exact_sqrt(RadicalSum::rational(8)), RadicalSum::term(2, 2));
  EXPECT_TRUE(exact_sqrt(RadicalSum{})->is_zero());
  EXPECT_FALSE(exact_sqrt(RadicalSum::sqrt(2)).has_value());
  EXPECT_FALSE(exact_sqrt(RadicalSum::rational(-4)).has_value());
}

TEST(ExactSqrt, SquaresBack) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> num(0, 100000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int i = 0; i < 3000; ++i) {
    const auto x = RadicalSum::rational(Rational(num(rng), den(rng)));
    const auto r = exact_sqrt(x);
    ASSERT_TRUE(r.has_value());
    ASSERT_EQ(*r * *r, x);
  }
}

TEST(RadicalText, Rendering) {
  EXPECT_EQ(render_radical(RadicalSum{}), "0");
  EXPECT_EQ(render_radical(RadicalSum::term(218, 2) + RadicalSum::term(16, 85)), "218*sqrt(2) + 16*sqrt(85)");
  EXPECT_EQ(render_radical(RadicalSum::rational(20) + RadicalSum::term(Rational(33, 2), 2)), "20 + 33/2*sqrt(2)");
  EXPECT_EQ(render_radical(-RadicalSum::sqrt(3)), "-1*sqrt(3)");
}

TEST(RadicalText, ParsesLenientForms) {
  EXPECT_EQ(parse_radical("0"), RadicalSum{});
  EXPECT_EQ(parse_radical("54*sqrt(5)"), RadicalSum::term(54, 5));
  EXPECT_EQ(parse_radical(" 18*sqrt(61)+30*sqrt(2) "), RadicalSum::term(18, 61) + RadicalSum::term(30, 2));
  EXPECT_EQ(parse_radical("sqrt(8)"), RadicalSum::term(2, 2));
  EXPECT_EQ(parse_radical("-3/2"), RadicalSum::rational(Rational(-3, 2)));
  EXPECT_THROW(parse_radical("sqrt("), InvalidArgument);
  EXPECT_THROW(parse_radical("2*sqrt(x)"), InvalidArgument);
  EXPECT_THROW(parse_radical(""), InvalidArgument);
}

TEST(RadicalText, RoundTripFuzz) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10000; ++i) {
    const auto v = random_sum(rng);
    ASSERT_EQ(parse_radical(render_radical(v)), v) << render_radical(v);
  }
}

TEST(RadicalText, FloatFormat) { EXPECT_EQ(render_float(0.5), "0.5"); }
