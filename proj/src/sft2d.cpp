#include "subshift/sft2d.hpp"

#include <algorithm>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

void check_symbols(const TileSet2D& ts, const Pattern2D& p, bool allow_holes) {
  if (p.width <= 0 || p.height <= 0) throw InputError("pattern must be at least 1x1");
  for (Symbol s : p.cells) {
    if (s == kHole) {
      if (!allow_holes) throw InputError("pattern must be hole-free");
      continue;
    }
    if (s < 0 || static_cast<std::size_t>(s) >= ts.alphabet().size())
      throw InputError("pattern symbol outside alphabet");
  }
}

Pattern2D embed(const Pattern2D& p, int margin) {
  Pattern2D win(p.width + 2 * margin, p.height + 2 * margin, kHole, p.x0 - margin, p.y0 - margin);
  for (int y = 0; y < p.height; ++y)
    for (int x = 0; x < p.width; ++x) win.at(x + margin, y + margin) = p.at(x, y);
  return win;
}

}  // namespace

bool locally_admissible(const TileSet2D& ts, const Pattern2D& p) {
  check_symbols(ts, p, false);
  const auto& r = ts.rules();
  for (int y = 0; y < p.height; ++y)
    for (int x = 0; x < p.width; ++x) {
      auto s = static_cast<std::size_t>(p.at(x, y));
      if (!r.allowed.test(s)) return false;
      if (x + 1 < p.width && !r.right_of[s].test(static_cast<std::size_t>(p.at(x + 1, y)))) return false;
      if (y + 1 < p.height && !r.above[s].test(static_cast<std::size_t>(p.at(x, y + 1)))) return false;
    }
  std::vector<Symbol> key;
  for (const auto& shape : r.shapes)
    for (int y = 0; y + shape.h <= p.height; ++y)
      for (int x = 0; x + shape.w <= p.width; ++x) {
        key.clear();
        for (int j = 0; j < shape.h; ++j)
          for (int i = 0; i < shape.w; ++i) key.push_back(p.at(x + i, y + j));
        if (shape.forbidden.count(key)) return false;
      }
  return true;
}

void enumerate_admissible(const TileSet2D& ts, int w, int h, const std::function<bool(const Pattern2D&)>& visit,
                          const Budget& budget) {
  if (w < 1 || h < 1) throw InputError("enumeration window must be at least 1x1");
  Solver solver(ts, Pattern2D(w, h), budget);
  solver.enumerate(visit);
}

PatternSet enumerate_admissible(const TileSet2D& ts, int w, int h, const Budget& budget) {
  PatternSet out(w, h);
  enumerate_admissible(
      ts, w, h,
      [&](const Pattern2D& p) {
        out.insert(p);
        return true;
      },
      budget);
  return out;
}

std::uint64_t count_admissible(const TileSet2D& ts, int w, int h, const Budget& budget) {
  if (w < 1 || h < 1) throw InputError("enumeration window must be at least 1x1");
  Solver solver(ts, Pattern2D(w, h), budget);
  return solver.count();
}

std::optional<Pattern2D> extend(const TileSet2D& ts, const Pattern2D& p, int r, const Budget& budget) {
  check_symbols(ts, p, true);
  if (r < 0) throw InputError("margin must be nonnegative");
  Solver solver(ts, embed(p, r), budget);
  return solver.first();
}

bool extensible(const TileSet2D& ts, const Pattern2D& p, int r, const Budget& budget) {
  return extend(ts, p, r, budget).has_value();
}

std::pair<int, int> agree_square_origin(int pw, int ph, int n, int m) {
  auto floor_half = [](int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };
  return {floor_half(2 * m + pw - n), floor_half(2 * m + ph - n)};
}

bool approx_derivative_member(const TileSet2D& ts, const Pattern2D& p, int n, int m, const Budget& budget) {
  check_symbols(ts, p, false);
  if (n < std::max(p.width, p.height) || m < n)
    throw InputError("need m >= n >= the side of the pattern's bounding square");
  Pattern2D win = embed(p, m);
  auto [sx, sy] = agree_square_origin(p.width, p.height, n, m);
  std::vector<int> order;
  std::vector<char> in_square(static_cast<std::size_t>(win.width * win.height), 0);
  for (int y = sy; y < sy + n; ++y)
    for (int x = sx; x < sx + n; ++x) {
      order.push_back(y * win.width + x);
      in_square[static_cast<std::size_t>(y * win.width + x)] = 1;
    }
  const std::size_t split = order.size();
  for (int c = 0; c < win.width * win.height; ++c)
    if (!in_square[static_cast<std::size_t>(c)]) order.push_back(c);
  Solver solver(ts, win, budget, order);
  return solver.split_with_two_completions(split);
}

}  // namespace subshift
