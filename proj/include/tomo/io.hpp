#pragma once

// Text formats. All integers are decimal, single-space separated, LF line
// endings.
//
// REC
// k <k> nu <nu> t <t>
// m <m> n <n>
// R r_1 ... r_n
// C c_1 ... c_m
// V
// <i> <j> <v>          one line per corner point, corner order
// END
//
// WREC
// k <k> t <t>
// m <m> n <n>
// R r_1 ... r_n
// C c_1 ... c_m
// W
// <i> <j> <rel> <val>  rel is one of <=, >=, =; the anchors listed form L
// END
//
// SOL m n
// <row n>              m characters of '0'/'1', top row first
// ...
// <row 1>
//
// TCOL
// m <m> n <n>
// R1 ... / R2 ... / C1 ... / C2 ...   per-color sums, one line each
// END

#include "tomo/grid.hpp"
#include "tomo/reductions.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace tomo {

using Instance = std::variant<RecInstance, WRecInstance>;

/// Parses a REC or WREC file. Throws ParseError with the offending line.
Instance parse_instance(std::string_view text);

std::string write_instance(const RecInstance& inst);
std::string write_instance(const WRecInstance& inst);
std::string write_instance(const Instance& inst);

std::string write_solution(const BinaryImage& x);
BinaryImage parse_solution(std::string_view text);

ThreeColorInstance parse_three_color(std::string_view text);
std::string write_three_color(const ThreeColorInstance& tc);

} // namespace tomo
