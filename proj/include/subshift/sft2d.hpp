#pragma once

#include <cstdint>
#include <functional>

#include "subshift/pattern2d.hpp"
#include "subshift/search.hpp"
#include "subshift/tileset.hpp"

namespace subshift {

bool locally_admissible(const TileSet2D& ts, const Pattern2D& p);

// Streams every locally admissible w×h pattern in lexicographic order
// (cells read row by row from the bottom). `visit` returns false to stop.
void enumerate_admissible(const TileSet2D& ts, int w, int h, const std::function<bool(const Pattern2D&)>& visit,
                          const Budget& budget = {});
PatternSet enumerate_admissible(const TileSet2D& ts, int w, int h, const Budget& budget = {});
std::uint64_t count_admissible(const TileSet2D& ts, int w, int h, const Budget& budget = {});

// p extends to a locally admissible pattern with margin r on every side.
bool extensible(const TileSet2D& ts, const Pattern2D& p, int r, const Budget& budget = {});
// The extension itself, if any.
std::optional<Pattern2D> extend(const TileSet2D& ts, const Pattern2D& p, int r, const Budget& budget = {});

// Lower-left corner, in margin-window coordinates, of the n×n square around
// a pw×ph pattern placed at (m, m). Centered on the pattern, rounding down.
std::pair<int, int> agree_square_origin(int pw, int ph, int n, int m);

// Two distinct admissible margin-m extensions of p exist that agree on the
// n×n square around p.
bool approx_derivative_member(const TileSet2D& ts, const Pattern2D& p, int n, int m, const Budget& budget = {});

}  // namespace subshift
