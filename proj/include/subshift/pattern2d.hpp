#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "subshift/alphabet.hpp"

namespace subshift {

inline constexpr Symbol kHole = -1;

// Rectangular symbol array. Local coordinates (x, y) run over
// [0, width) × [0, height) with row 0 at the bottom; the origin places the
// lower-left cell on the plane.
struct Pattern2D {
  int x0 = 0, y0 = 0;
  int width = 0, height = 0;
  std::vector<Symbol> cells;

  Pattern2D() = default;
  Pattern2D(int w, int h, Symbol fill = kHole, int ox = 0, int oy = 0)
      : x0(ox), y0(oy), width(w), height(h), cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
  }
  Symbol at(int x, int y) const { return cells[index(x, y)]; }
  Symbol& at(int x, int y) { return cells[index(x, y)]; }
  bool inside(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
  bool has_holes() const;
  // Sub-rectangle in local coordinates; keeps plane placement.
  Pattern2D crop(int x, int y, int w, int h) const;

  friend bool operator==(const Pattern2D& a, const Pattern2D& b) {
    return a.width == b.width && a.height == b.height && a.cells == b.cells;
  }
};

// Deduplicated set of hole-free blocks of one common size, with the origin
// forgotten.
class PatternSet {
 public:
  PatternSet(int w, int h) : width_(w), height_(h) {}
  // Every hole-free w×h block of p.
  static PatternSet blocks_of(const Pattern2D& p, int w, int h);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return blocks_.size(); }
  void insert(const Pattern2D& p);
  bool contains(const Pattern2D& p) const;
  std::vector<Pattern2D> patterns() const;
  const std::set<std::vector<Symbol>>& raw() const { return blocks_; }

 private:
  int width_, height_;
  std::set<std::vector<Symbol>> blocks_;
};

// Every block of a occurs in b.
bool subpattern_leq(const PatternSet& a, const PatternSet& b);

// Does `needle` occur somewhere in `hay`? Holes in the needle match anything.
bool occurs_in(const Pattern2D& needle, const Pattern2D& hay);

// Text form: top row first, '.' for holes, comma separated cells when the
// alphabet has multi-character symbols.
std::string pattern_to_text(const Pattern2D& p, const Alphabet& a);
Pattern2D pattern_from_text(const std::string& text, const Alphabet& a);

// Plain ASCII PGM; symbol i maps to gray level i * 254 / (k - 1), holes to 255.
std::string pattern_to_pgm(const Pattern2D& p, const Alphabet& a);

}  // namespace subshift
