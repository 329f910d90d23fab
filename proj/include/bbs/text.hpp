#pragma once

// Canonical text forms.
//
//   row      <112>        letters as digits; with n > 9 use commas: <1,10,12>
//   column   [1/3]        top/bottom
//   tensor   <111>*<1>*[2/3]
//   path     55432.....542....2   '.' (or '1') = empty box, '2'..'9' = balls
//
// Parsers throw ParseError naming the offending position.

#include <string>
#include <string_view>

#include "bbs/crystals.hpp"
#include "bbs/dynamics.hpp"

namespace bbs {

std::string to_string(const RowTableau& b);
std::string to_string(const ColumnPair& b);
std::string to_string(const Factor& b);
std::string to_string(const TensorElement& t);
std::string to_string(const Weight& w);
std::string to_string(FactorShape s);
std::string to_string(const Shape& s);

Factor parse_factor(std::string_view text, Alphabet alphabet);
TensorElement parse_tensor(std::string_view text, Alphabet alphabet);

/// Parses "3", "1", "c" (column), ... into factor shapes; items separated by ','.
std::vector<FactorShape> parse_shapes(std::string_view text);

/// Dot-and-digit rendering, right-padded with '.' to at least `width` cells.
/// Requires n <= 9.
std::string to_ascii(const BasicPath& p, int width = 0);
BasicPath parse_ascii(std::string_view text, Alphabet alphabet);

/// Inhomogeneous path as '|'-separated rows, e.g. "<11>|<2>|<123>".
std::string to_string(const InhomPath& p);

}  // namespace bbs
