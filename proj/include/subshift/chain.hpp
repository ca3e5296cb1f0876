#pragma once

#include <utility>

#include "subshift/configuration.hpp"

namespace subshift {

// Descending chain x_1, x_2, ... of binary configurations built on
// powers-of-two lines. Scheme version 1:
//   line l sits at height 0 for l = 0 and 2^l above;
//   x_1 has its line 0 markers at 2^n for n >= 0;
//   x_i for i >= 2 has a single marker at the origin on line i - 2 and
//   nothing below it;
//   line l + 1 gets, for each pair of consecutive markers a < b of line l,
//   the markers a + 2^n with 3 * 2^n < b - a, and a + 2^n for every n after
//   the last marker of line l, if there is one.
// Markers are 1s, everything else is 0.
ConfigurationWindow chain_point(int i, Bounds b);

struct ChainEvidence {
  bool leq;  // every small-window pattern of x_j occurs in x_i
  bool geq;  // every small-window pattern of x_i occurs in x_j
};

// Patterns of side `small` are collected from the square
// [-2 small, -2 small + max(4 small, big / 16))^2 of one point and looked up among all
// patterns of the square [-2 small, -2 small + big)^2 of the other.
ChainEvidence verify_chain(int i, int j, int small, int big);

}  // namespace subshift
