#pragma once

#include <string>

#include "subshift/configuration.hpp"
#include "subshift/tileset.hpp"

namespace subshift {

// Nested red/blue diamonds on a dedicated horizontal line (row 0), with
// decrement signals: every red top emits a signal to the right one row below
// the one it absorbs, every blue bottom likewise to the left.
//
// Symbols have three layers, spelled as 4-character names:
//   U<red><blue><signal>  cell above the line, signal = red signal layer
//   D<red><blue><signal>  cell below the line, signal = blue signal layer
//   L<red><blue><phase>   cell on the line
// Shape letters give the cell's place in a diamond of that color:
//   o outside, l left edge, r right edge, t apex, and for interior cells the
//   role of the cell one row further from the line: a under a left edge,
//   c under a right edge, m under the apex, i under the interior.
// Signal letters: u between line and signal, s the signal, x a signal being
// absorbed above (below) an apex, v beyond the signal.
// Phase letters track nesting along the line, left to right:
//   n outside all diamonds, A red open waiting for its blue, D red open with
//   its blue already closed, a / d the same with colors swapped, X blue
//   inside red, Y red inside blue, S both opened on the same cell.
// Every diamond has exactly one partner of the other color.
TileSet2D diamond_shift();

// The smallest configuration of type (n, m): one red diamond of size m and
// one blue of size n, concentric about x = 0. The red signal arrives from the
// left at height m + 1 and leaves to the right at height m; the blue one
// arrives from the right at depth n + 1 and leaves to the left at depth n.
ConfigurationWindow diamond_config(int n, int m, Bounds b);

// Symbol name at plane point (x, y) of that configuration.
std::string diamond_symbol(int n, int m, int x, int y);

// Columns -(s+1)..s+1 and rows -(n+1)..m+1 of diamond_config(n, m), where
// s = max(n, m): both diamonds and the absorbed and emitted signals.
ConfigurationWindow diamond_core(int n, int m);

// One-dimensional model of the same idea: the point 0^inf w 0^inf, with w
// over {0, a, b}, has the form a^k 0^m1 a^(k-1) b 0^m2 ... 0^mk b^k with
// every m_i >= 1 (the all-zero point is the case k = 0).
bool island_point_valid(const std::string& w);

}  // namespace subshift
