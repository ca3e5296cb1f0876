#include "subshift/diamond.hpp"

#include <algorithm>
#include <cstdlib>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

constexpr char kShapes[] = {'o', 'l', 'r', 't', 'i', 'a', 'c', 'm'};
constexpr char kSignals[] = {'u', 's', 'x', 'v'};
constexpr char kPhases[] = {'n', 'A', 'D', 'a', 'd', 'X', 'Y', 'S'};

struct Cell {
  char kind;  // 'U', 'L' or 'D'
  char red, blue;
  char extra;  // signal or phase
  std::string name() const { return std::string{kind, red, blue, extra}; }
};

bool phase_fits(char red, char blue, char phase) {
  const bool r = red != 'o', b = blue != 'o';
  switch (phase) {
    case 'n': return !r && !b;
    case 'A': case 'D': return r && !b;
    case 'a': case 'd': return b && !r;
    default: return r && b;
  }
}

std::vector<Cell> all_cells() {
  std::vector<Cell> cells;
  for (char kind : {'U', 'L', 'D'})
    for (char red : kShapes)
      for (char blue : kShapes) {
        if (kind == 'L') {
          if (red == 't' || blue == 't') continue;  // no apex on the line
          for (char ph : kPhases)
            if (phase_fits(red, blue, ph)) cells.push_back({kind, red, blue, ph});
        } else {
          const char own = kind == 'U' ? red : blue;
          for (char sig : kSignals)
            if (own == 'o' || sig == 'u') cells.push_back({kind, red, blue, sig});
        }
      }
  return cells;
}

// a directly left of b, both in one row and of one color.
bool shape_h(char a, char b) {
  switch (a) {
    case 'o': return b == 'o' || b == 'l' || b == 't';
    case 'l': return b == 'a' || b == 'm';
    case 'a': return b == 'i';
    case 'i': return b == 'i' || b == 'c';
    case 'c': return b == 'r';
    case 'm': return b == 'r';
    case 'r': return b == 'o' || b == 'l';
    case 't': return b == 'o';
  }
  return false;
}

// `near` is one row closer to the line than `far`.
bool shape_v(char near, char far) {
  switch (near) {
    case 'a': return far == 'l';
    case 'c': return far == 'r';
    case 'm': return far == 't';
    case 'i': return far == 'i' || far == 'a' || far == 'c' || far == 'm';
    default: return far == 'o';
  }
}

// Signal layer across rows; `own` is the near cell's shape in the signal's
// color.
bool signal_v(char own, char near, char far) {
  if (near != 'u') return far == 'v';
  if (own == 't') return far == 'x';
  return far == 'u' || far == 's';
}

// Signal layer along a row: `back` is the cell the signal comes from.
bool signal_h(char back_own, char back, char front) {
  switch (back) {
    case 's': return front == 's' || front == 'x';
    case 'x': case 'v': return front == 'v';
    default: return back_own == 't' ? front == 's' : front == 'u';
  }
}

// Nesting phase after the line cell (red, blue, phase) closes what ends there.
char phase_after_close(char red, char blue, char phase) {
  const bool cr = red == 'r', cb = blue == 'r';
  switch (phase) {
    case 'n': return 'n';
    case 'A': return cr ? '!' : 'A';
    case 'a': return cb ? '!' : 'a';
    case 'D': return cr ? 'n' : 'D';
    case 'd': return cb ? 'n' : 'd';
    case 'X':
      if (cr && cb) return 'n';
      if (cr) return '!';
      return cb ? 'D' : 'X';
    case 'Y':
      if (cr && cb) return 'n';
      if (cb) return '!';
      return cr ? 'd' : 'Y';
    case 'S':
      if (cr && cb) return 'n';
      if (cb) return 'D';
      return cr ? 'd' : 'S';
  }
  return '!';
}

char phase_after_open(char phase, char red, char blue) {
  const bool opr = red == 'l', opb = blue == 'l';
  switch (phase) {
    case 'n':
      if (opr && opb) return 'S';
      if (opr) return 'A';
      return opb ? 'a' : 'n';
    case 'A': return opb ? 'X' : 'A';
    case 'a': return opr ? 'Y' : 'a';
    case 'D': return opb ? '!' : 'D';
    case 'd': return opr ? '!' : 'd';
    default: return phase;
  }
}

bool allowed_horizontal(const Cell& a, const Cell& b) {
  if (a.kind != b.kind) return false;
  if (!shape_h(a.red, b.red) || !shape_h(a.blue, b.blue)) return false;
  switch (a.kind) {
    case 'U': return signal_h(a.red, a.extra, b.extra);
    case 'D': return signal_h(b.blue, b.extra, a.extra);
    default: {
      char ph = phase_after_open(phase_after_close(a.red, a.blue, a.extra), b.red, b.blue);
      return ph == b.extra;
    }
  }
}

// a directly below b.
bool allowed_vertical(const Cell& a, const Cell& b) {
  if (a.kind == 'U' && b.kind == 'U')
    return shape_v(a.red, b.red) && shape_v(a.blue, b.blue) && signal_v(a.red, a.extra, b.extra);
  if (a.kind == 'D' && b.kind == 'D')
    return shape_v(b.red, a.red) && shape_v(b.blue, a.blue) && signal_v(b.blue, b.extra, a.extra);
  if (a.kind == 'L' && b.kind == 'U') {
    if (!shape_v(a.red, b.red) || !shape_v(a.blue, b.blue)) return false;
    if (b.extra != 'u' && b.extra != 's') return false;
    // Nothing may start under a red signal.
    if ((a.red == 'l' || a.blue == 'l') && b.extra != 'u') return false;
    return true;
  }
  if (a.kind == 'D' && b.kind == 'L') {
    if (!shape_v(b.red, a.red) || !shape_v(b.blue, a.blue)) return false;
    if (a.extra != 'u' && a.extra != 's') return false;
    if ((b.red == 'r' || b.blue == 'r') && a.extra != 'u') return false;
    return true;
  }
  return false;
}

// Shape letter of plane point (x, y) for a diamond of size s centered at 0.
char shape_at(int s, int x, int y) {
  const int d = std::abs(y);
  if (d > s) return 'o';
  const int half = s - d;
  if (std::abs(x) > half) return 'o';
  if (d == s) return 't';
  if (x == -half) return 'l';
  if (x == half) return 'r';
  if (d + 1 == s) return 'm';
  if (x == -half + 1) return 'a';
  if (x == half - 1) return 'c';
  return 'i';
}

// Signal letter for the signal sent from the apex of a size-s diamond at
// x = 0 toward positive x, arriving one row further out from negative x.
// `t` is the distance from the line, `x` is measured along the travel
// direction.
char signal_at(int s, int x, int t) {
  if (x == 0) return t <= s ? 'u' : t == s + 1 ? 'x' : 'v';
  const int h = x < 0 ? s + 1 : s;
  return t < h ? 'u' : t == h ? 's' : 'v';
}

}  // namespace

TileSet2D diamond_shift() {
  const auto cells = all_cells();
  std::vector<std::string> names;
  for (const auto& c : cells) names.push_back(c.name());
  Alphabet alpha(names);
  std::vector<Pattern2D> forbidden;
  const auto k = static_cast<Symbol>(cells.size());
  for (Symbol a = 0; a < k; ++a)
    for (Symbol b = 0; b < k; ++b) {
      if (!allowed_horizontal(cells[a], cells[b])) {
        Pattern2D p(2, 1);
        p.cells = {a, b};
        forbidden.push_back(std::move(p));
      }
      if (!allowed_vertical(cells[a], cells[b])) {
        Pattern2D p(1, 2);
        p.cells = {a, b};
        forbidden.push_back(std::move(p));
      }
    }
  std::size_t upper = 0, line = 0, lower = 0;
  for (const auto& c : cells) (c.kind == 'U' ? upper : c.kind == 'L' ? line : lower)++;
  nlohmann::json meta = {
      {"generator", "diamond_shift"},
      {"scheme_version", 1},
      {"layers", {"red shape", "blue shape", "signal (red above the line, blue below) or line phase"}},
      {"symbol_counts", {{"upper", upper}, {"line", line}, {"lower", lower}, {"total", cells.size()}}},
      {"shape_letters", "o outside, l left edge, r right edge, t apex, a/c/m/i interior under l/r/t/interior"},
      {"signal_letters", "u under signal, s signal, x absorbed signal, v beyond signal"},
      {"phase_letters", "n none, A red awaiting blue, D red done, a blue awaiting red, d blue done, "
                        "X blue in red, Y red in blue, S opened together"}};
  return TileSet2D(std::move(alpha), std::move(forbidden), std::move(meta));
}

std::string diamond_symbol(int n, int m, int x, int y) {
  const char red = shape_at(m, x, y), blue = shape_at(n, x, y);
  if (y > 0) return std::string{'U', red, blue, signal_at(m, x, y)};
  if (y < 0) return std::string{'D', red, blue, signal_at(n, -x, -y)};
  char phase;
  const bool r = red != 'o', b = blue != 'o';
  if (!r && !b)
    phase = 'n';
  else if (r && b)
    phase = m == n ? 'S' : (m > n ? 'X' : 'Y');
  else if (r)
    phase = x < 0 ? 'A' : 'D';
  else
    phase = x < 0 ? 'a' : 'd';
  return std::string{'L', red, blue, phase};
}

ConfigurationWindow diamond_config(int n, int m, Bounds b) {
  if (n < 1 || m < 1) throw InputError("diamond sizes must be at least 1");
  const int s = std::max(n, m);
  if (b.w < 2 * s + 3 || b.h < n + m + 3)
    throw InputError("window too small for a type (" + std::to_string(n) + "," + std::to_string(m) +
                     ") diamond pair: need at least " + std::to_string(2 * s + 3) + "x" +
                     std::to_string(n + m + 3));
  ConfigurationWindow cw;
  cw.generator = "diamond";
  cw.parameters = {{"n", n}, {"m", m}};
  std::vector<std::string> names;
  for (const auto& c : all_cells()) names.push_back(c.name());
  cw.alphabet = Alphabet(names);
  cw.window = Pattern2D(b.w, b.h, kHole, b.x0, b.y0);
  for (int y = 0; y < b.h; ++y)
    for (int x = 0; x < b.w; ++x) cw.window.at(x, y) = cw.alphabet.index(diamond_symbol(n, m, b.x0 + x, b.y0 + y));
  return cw;
}

ConfigurationWindow diamond_core(int n, int m) {
  const int s = std::max(n, m);
  auto cw = diamond_config(n, m, Bounds{-(s + 1), -(n + 1), 2 * s + 3, n + m + 3});
  cw.generator = "diamond_core";
  return cw;
}

bool island_point_valid(const std::string& w) {
  std::vector<std::string> islands;
  std::string cur;
  for (char ch : w) {
    if (ch != '0' && ch != 'a' && ch != 'b') throw InputError("island words are over {0, a, b}");
    if (ch == '0') {
      if (!cur.empty()) islands.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) islands.push_back(std::move(cur));
  if (islands.empty()) return true;
  const std::size_t k = islands.size() - 1;
  if (k == 0) return false;
  for (std::size_t i = 0; i <= k; ++i)
    if (islands[i] != std::string(k - i, 'a') + std::string(i, 'b')) return false;
  return true;
}

}  // namespace subshift
