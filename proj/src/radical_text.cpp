#include "sombor/radical_text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "sombor/error.hpp"

namespace sombor {

std::string render_radical(const RadicalSum& value) {
  if (value.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : value.terms()) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    if (s != 1) out += "*sqrt(" + std::to_string(s) + ")";
  }
  return out;
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

template <class Int>
Int parse_int(std::string_view s, std::string_view whole) {
  Int v{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw InvalidArgument("malformed radical text: '" + std::string(whole) + "'");
  return v;
}

Rational parse_rational(std::string_view s, std::string_view whole) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int<std::int64_t>(s, whole));
  const auto den = parse_int<std::int64_t>(s.substr(slash + 1), whole);
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(whole) + "'");
  return Rational(parse_int<std::int64_t>(s.substr(0, slash), whole), den);
}

// "c", "c*sqrt(m)", "sqrt(m)" or "-sqrt(m)", whitespace already removed.
RadicalSum parse_term(std::string_view term, std::string_view whole) {
  constexpr std::string_view kSqrt = "sqrt(";
  const auto at = term.find(kSqrt);
  if (at == std::string_view::npos) return RadicalSum::rational(parse_rational(term, whole));
  if (term.back() != ')') throw InvalidArgument("malformed radical text: '" + std::string(whole) + "'");
  const auto head = term.substr(0, at);
  Rational coeff(1);
  if (head == "-") {
    coeff = Rational(-1);
  } else if (!head.empty()) {
    if (head.back() != '*') throw InvalidArgument("malformed radical text: '" + std::string(whole) + "'");
    coeff = parse_rational(head.substr(0, head.size() - 1), whole);
  }
  const auto inner = term.substr(at + kSqrt.size(), term.size() - at - kSqrt.size() - 1);
  const auto radicand = parse_int<std::uint64_t>(inner, whole);
  if (radicand == 0) return {};
  return RadicalSum::term(coeff, radicand);
}

}  // namespace

RadicalSum parse_radical(std::string_view text) {
  const auto compact = strip_spaces(text);
  if (compact.empty()) throw InvalidArgument("empty radical text");
  std::string_view rest = compact;
  RadicalSum sum;
  for (;;) {
    const auto plus = rest.find('+');
    sum += parse_term(rest.substr(0, plus), text);
    if (plus == std::string_view::npos) break;
    rest.remove_prefix(plus + 1);
  }
  return sum;
}

std::string render_float(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace sombor
