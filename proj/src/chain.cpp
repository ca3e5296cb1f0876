#include "subshift/chain.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

std::int64_t line_height(int l) { return l == 0 ? 0 : std::int64_t{1} << l; }

// Markers of one line, known exactly on (-inf, bound]. `finite` means the
// list is the whole line.
struct Line {
  std::vector<std::int64_t> markers;
  std::int64_t bound;
  bool finite;
};

Line next_line(const Line& cur) {
  Line out{{}, cur.bound, false};
  const auto& m = cur.markers;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const std::int64_t a = m[k];
    if (k + 1 < m.size()) {
      for (std::int64_t p = 1; 3 * p < m[k + 1] - a; p *= 2) out.markers.push_back(a + p);
    } else if (cur.finite) {
      for (std::int64_t p = 1; a + p <= cur.bound; p *= 2) out.markers.push_back(a + p);
    }
  }
  // Past the last known marker the gap to its successor is unknown.
  if (!cur.finite) out.bound = m.empty() ? cur.bound : std::min(cur.bound, m.back());
  std::sort(out.markers.begin(), out.markers.end());
  std::erase_if(out.markers, [&](std::int64_t x) { return x > out.bound; });
  return out;
}

// Lines 0.. of x_i until the first one at or above `top`, each known at
// least up to `right`.
std::map<int, Line> chain_lines(int i, std::int64_t right, std::int64_t top) {
  for (std::int64_t reach = std::max<std::int64_t>(64, 8 * right);; reach *= 4) {
    std::map<int, Line> lines;
    int l;
    if (i == 1) {
      Line base{{}, reach, false};
      for (std::int64_t p = 1; p <= reach; p *= 2) base.markers.push_back(p);
      lines[0] = base;
      l = 0;
    } else {
      lines[i - 2] = Line{{0}, reach, true};
      l = i - 2;
    }
    bool ok = true;
    while (line_height(l) < top) {
      if (lines[l].bound < right) {
        ok = false;
        break;
      }
      lines[l + 1] = next_line(lines[l]);
      ++l;
    }
    if (ok) return lines;
  }
}

PatternSet probe_blocks(int i, int small, int side) {
  const int a0 = -2 * small;
  return PatternSet::blocks_of(chain_point(i, Bounds{a0, a0, side, side}).window, small, small);
}

}  // namespace

ConfigurationWindow chain_point(int i, Bounds b) {
  if (i < 1) throw InputError("chain index must be at least 1");
  if (b.w < 1 || b.h < 1) throw InputError("window must be at least 1x1");
  ConfigurationWindow cw;
  cw.generator = "chain";
  cw.parameters = {{"i", i}};
  cw.alphabet = Alphabet({"0", "1"});
  cw.window = Pattern2D(b.w, b.h, 0, b.x0, b.y0);
  const std::int64_t right = std::int64_t{b.x0} + b.w, top = std::int64_t{b.y0} + b.h;
  if (top <= 0 || right <= 0) return cw;
  for (const auto& [l, line] : chain_lines(i, right, top)) {
    const std::int64_t y = line_height(l);
    if (y < b.y0 || y >= top) continue;
    for (std::int64_t x : line.markers)
      if (x >= b.x0 && x < right) cw.window.at(static_cast<int>(x - b.x0), static_cast<int>(y - b.y0)) = 1;
  }
  return cw;
}

ChainEvidence verify_chain(int i, int j, int small, int big) {
  if (small < 1 || big < small) throw InputError("need 1 <= small <= big");
  const int probe = std::min(big, std::max(4 * small, big / 16));
  auto big_i = probe_blocks(i, small, big), big_j = probe_blocks(j, small, big);
  auto probe_i = probe_blocks(i, small, probe), probe_j = probe_blocks(j, small, probe);
  return {subpattern_leq(probe_j, big_i), subpattern_leq(probe_i, big_j)};
}

}  // namespace subshift
