#pragma once

#include "subshift/configuration.hpp"
#include "subshift/tileset.hpp"

namespace subshift {

// Grid shift: horizontal and vertical lines meeting at crosses, each cell
// crossed by a diagonal from its lower-left to its upper-right corner, which
// forces cells to be square. Line cells next to a cross get their own symbols
// so that every rule is a constraint on adjacent pairs:
//
//   x  cross           h  horizontal line     v  vertical line
//   l  first h after a cross (left end)       u  first v above a cross
//   r  last h before a cross (right end)      t  last v below a cross
//   e  h cell that is both first and last     o  v cell that is both
//   d  diagonal        a  cell right of a diagonal cell, below the next one
//   b  blank
//
// The allowed pairs are exactly the adjacent pairs seen in uniform grids of
// square cells of side 1..6; everything else is forbidden.
TileSet2D grid_shift();

// Symbol at plane point (x, y) of the uniform grid with square cells of the
// given side, crosses at multiples of side + 1.
std::string grid_symbol(int side, int x, int y);

ConfigurationWindow grid_window(int side, Bounds b);

// A window of holes with the complete border of a rw×rh cell pinned, its
// lower-left cross at (x, y) in window coordinates.
Pattern2D grid_rectangle_pins(const TileSet2D& grid, int window_w, int window_h, int x, int y, int rw, int rh);

}  // namespace subshift
