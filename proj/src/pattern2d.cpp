#include "subshift/pattern2d.hpp"

#include <algorithm>
#include <sstream>

#include "subshift/errors.hpp"

namespace subshift {

bool Pattern2D::has_holes() const {
  return std::find(cells.begin(), cells.end(), kHole) != cells.end();
}

Pattern2D Pattern2D::crop(int x, int y, int w, int h) const {
  if (x < 0 || y < 0 || w < 0 || h < 0 || x + w > width || y + h > height)
    throw InputError("crop outside pattern");
  Pattern2D out(w, h, kHole, x0 + x, y0 + y);
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) out.at(i, j) = at(x + i, y + j);
  return out;
}

PatternSet PatternSet::blocks_of(const Pattern2D& p, int w, int h) {
  if (w <= 0 || h <= 0) throw InputError("block size must be positive");
  PatternSet out(w, h);
  std::vector<Symbol> key(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (int y = 0; y + h <= p.height; ++y)
    for (int x = 0; x + w <= p.width; ++x) {
      bool hole = false;
      std::size_t k = 0;
      for (int j = 0; j < h && !hole; ++j)
        for (int i = 0; i < w; ++i) {
          Symbol s = p.at(x + i, y + j);
          if (s == kHole) {
            hole = true;
            break;
          }
          key[k++] = s;
        }
      if (!hole) out.blocks_.insert(key);
    }
  return out;
}

void PatternSet::insert(const Pattern2D& p) {
  if (p.width != width_ || p.height != height_) throw InputError("pattern size does not match the set");
  if (p.has_holes()) throw InputError("pattern sets hold hole-free patterns only");
  blocks_.insert(p.cells);
}

bool PatternSet::contains(const Pattern2D& p) const {
  return p.width == width_ && p.height == height_ && blocks_.count(p.cells) != 0;
}

std::vector<Pattern2D> PatternSet::patterns() const {
  std::vector<Pattern2D> out;
  for (const auto& b : blocks_) {
    Pattern2D p(width_, height_);
    p.cells = b;
    out.push_back(std::move(p));
  }
  return out;
}

bool subpattern_leq(const PatternSet& a, const PatternSet& b) {
  if (a.width() != b.width() || a.height() != b.height()) throw InputError("pattern sets of different block sizes");
  return std::includes(b.raw().begin(), b.raw().end(), a.raw().begin(), a.raw().end());
}

bool occurs_in(const Pattern2D& needle, const Pattern2D& hay) {
  for (int y = 0; y + needle.height <= hay.height; ++y)
    for (int x = 0; x + needle.width <= hay.width; ++x) {
      bool ok = true;
      for (int j = 0; j < needle.height && ok; ++j)
        for (int i = 0; i < needle.width; ++i) {
          Symbol s = needle.at(i, j);
          if (s != kHole && s != hay.at(x + i, y + j)) {
            ok = false;
            break;
          }
        }
      if (ok) return true;
    }
  return false;
}

std::string pattern_to_text(const Pattern2D& p, const Alphabet& a) {
  std::string out;
  for (int y = p.height - 1; y >= 0; --y) {
    for (int x = 0; x < p.width; ++x) {
      if (!a.single_char() && x) out += ',';
      Symbol s = p.at(x, y);
      out += s == kHole ? std::string(".") : a.name(s);
    }
    out += '\n';
  }
  return out;
}

Pattern2D pattern_from_text(const std::string& text, const Alphabet& a) {
  std::vector<std::vector<Symbol>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Symbol> row;
    auto cell = [&](const std::string& tok) { row.push_back(tok == "." ? kHole : a.index(tok)); };
    if (a.single_char() && line.find(',') == std::string::npos) {
      for (char c : line) cell(std::string(1, c));
    } else {
      std::size_t start = 0;
      while (true) {
        auto comma = line.find(',', start);
        cell(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("empty pattern text");
  const int w = static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != w) throw InputError("pattern rows have different lengths");
  const int h = static_cast<int>(rows.size());
  Pattern2D p(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) p.at(x, y) = rows[static_cast<std::size_t>(h - 1 - y)][static_cast<std::size_t>(x)];
  return p;
}

std::string pattern_to_pgm(const Pattern2D& p, const Alphabet& a) {
  std::ostringstream out;
  out << "P2\n" << p.width << ' ' << p.height << "\n255\n";
  const std::size_t k = a.size();
  for (int y = p.height - 1; y >= 0; --y) {
    for (int x = 0; x < p.width; ++x) {
      Symbol s = p.at(x, y);
      int g = s == kHole ? 255 : (k <= 1 ? 0 : static_cast<int>(static_cast<std::size_t>(s) * 254 / (k - 1)));
      out << (x ? " " : "") << g;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace subshift
