#include "subshift/grid.hpp"

#include <set>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

const std::vector<std::string> kGridSymbols = {"b", "a", "d", "x", "h", "l", "r", "e", "v", "u", "t", "o"};

int mod(int a, int p) { return ((a % p) + p) % p; }

std::string line_symbol(int k, int side, const char* mid, const char* first, const char* last, const char* both) {
  if (k == 1 && k == side) return both;
  if (k == 1) return first;
  if (k == side) return last;
  return mid;
}

}  // namespace

std::string grid_symbol(int side, int x, int y) {
  const int p = side + 1;
  const int i = mod(x, p), j = mod(y, p);
  if (i == 0 && j == 0) return "x";
  if (j == 0) return line_symbol(i, side, "h", "l", "r", "e");
  if (i == 0) return line_symbol(j, side, "v", "u", "t", "o");
  if (i == j) return "d";
  if (i == j + 1) return "a";
  return "b";
}

TileSet2D grid_shift() {
  Alphabet alpha(kGridSymbols);
  std::set<std::pair<Symbol, Symbol>> horiz, vert;
  for (int side = 1; side <= 6; ++side) {
    const int span = 3 * (side + 1);
    for (int y = 0; y < span; ++y)
      for (int x = 0; x < span; ++x) {
        Symbol s = alpha.index(grid_symbol(side, x, y));
        horiz.insert({s, alpha.index(grid_symbol(side, x + 1, y))});
        vert.insert({s, alpha.index(grid_symbol(side, x, y + 1))});
      }
  }
  std::vector<Pattern2D> forbidden;
  const auto k = static_cast<Symbol>(alpha.size());
  for (Symbol a = 0; a < k; ++a)
    for (Symbol b = 0; b < k; ++b) {
      if (!horiz.count({a, b})) {
        Pattern2D p(2, 1);
        p.cells = {a, b};
        forbidden.push_back(p);
      }
      if (!vert.count({a, b})) {
        Pattern2D p(1, 2);
        p.cells = {a, b};
        forbidden.push_back(p);
      }
    }
  nlohmann::json meta = {{"generator", "grid_shift"},
                         {"scheme_version", 1},
                         {"symbols",
                          {{"b", "blank"},
                           {"a", "right of a diagonal cell"},
                           {"d", "diagonal"},
                           {"x", "cross"},
                           {"h", "horizontal line"},
                           {"l", "horizontal line, first after a cross"},
                           {"r", "horizontal line, last before a cross"},
                           {"e", "horizontal line, first and last"},
                           {"v", "vertical line"},
                           {"u", "vertical line, first above a cross"},
                           {"t", "vertical line, last below a cross"},
                           {"o", "vertical line, first and last"}}}};
  return TileSet2D(std::move(alpha), std::move(forbidden), std::move(meta));
}

ConfigurationWindow grid_window(int side, Bounds b) {
  if (side < 1) throw InputError("grid cell side must be at least 1");
  if (b.w < 1 || b.h < 1) throw InputError("window must be at least 1x1");
  ConfigurationWindow cw;
  cw.generator = "grid";
  cw.parameters = {{"side", side}};
  cw.alphabet = Alphabet(kGridSymbols);
  cw.window = Pattern2D(b.w, b.h, kHole, b.x0, b.y0);
  for (int y = 0; y < b.h; ++y)
    for (int x = 0; x < b.w; ++x) cw.window.at(x, y) = cw.alphabet.index(grid_symbol(side, b.x0 + x, b.y0 + y));
  return cw;
}

Pattern2D grid_rectangle_pins(const TileSet2D& grid, int window_w, int window_h, int x, int y, int rw, int rh) {
  if (rw < 1 || rh < 1) throw InputError("rectangle sides must be at least 1");
  if (x < 0 || y < 0 || x + rw + 1 >= window_w || y + rh + 1 >= window_h)
    throw InputError("rectangle border does not fit in the window");
  const auto& a = grid.alphabet();
  Pattern2D p(window_w, window_h);
  for (int i = 0; i <= rw + 1; ++i) {
    std::string s = (i == 0 || i == rw + 1) ? "x" : line_symbol(i, rw, "h", "l", "r", "e");
    p.at(x + i, y) = a.index(s);
    p.at(x + i, y + rh + 1) = a.index(s);
  }
  for (int j = 1; j <= rh; ++j) {
    std::string s = line_symbol(j, rh, "v", "u", "t", "o");
    p.at(x, y + j) = a.index(s);
    p.at(x + rw + 1, y + j) = a.index(s);
  }
  return p;
}

}  // namespace subshift
