#pragma once

#include <string>
#include <string_view>

#include "sombor/radical.hpp"

namespace sombor {

/// Canonical text: terms by ascending radicand joined with " + ", each
/// written `c*sqrt(s)`, the radicand-1 term written as the bare rational,
/// rationals as `num/den` in lowest terms, and `0` for the empty sum.
///
///   218*sqrt(2) + 16*sqrt(85)
///   20 + 33/2*sqrt(2)
std::string render_radical(const RadicalSum& value);

/// Inverse of render_radical. Also accepts non-canonical input (unsorted
/// terms, repeated or non-square-free radicands, "sqrt(m)" without a
/// coefficient, arbitrary spacing) and normalizes it.
/// Throws InvalidArgument on malformed text.
RadicalSum parse_radical(std::string_view text);

/// 12 significant digits.
std::string render_float(double value);

}  // namespace sombor
