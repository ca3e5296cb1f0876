#pragma once

#include <memory>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "subshift/bitset.hpp"
#include "subshift/pattern2d.hpp"

namespace subshift {

struct SymbolVecHash {
  std::size_t operator()(const std::vector<Symbol>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Symbol s : v) h = (h ^ static_cast<std::size_t>(s + 1)) * 1099511628211ull;
    return h;
  }
};

// Forbidden patterns compiled for fast checking: single cells and adjacent
// pairs become bit tables, anything larger is looked up by shape.
struct CompiledRules {
  Bitset allowed;                  // symbols not forbidden as 1×1
  std::vector<Bitset> right_of;    // right_of[a]: symbols allowed right of a
  std::vector<Bitset> left_of;     // left_of[b]: symbols allowed left of b
  std::vector<Bitset> above;       // above[a]: symbols allowed on top of a
  std::vector<Bitset> below;       // below[b]: symbols allowed under b
  struct Shape {
    int w, h;
    std::unordered_set<std::vector<Symbol>, SymbolVecHash> forbidden;
  };
  std::vector<Shape> shapes;
  int reach_up = 0;  // how many rows back a constraint can look (window h - 1)
};

class TileSet2D {
 public:
  TileSet2D(Alphabet alphabet, std::vector<Pattern2D> forbidden, nlohmann::json metadata = nlohmann::json::object());

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Pattern2D>& forbidden() const { return forbidden_; }
  const nlohmann::json& metadata() const { return metadata_; }
  int window_w() const { return window_w_; }
  int window_h() const { return window_h_; }
  const CompiledRules& rules() const { return *rules_; }

 private:
  Alphabet alphabet_;
  std::vector<Pattern2D> forbidden_;
  nlohmann::json metadata_;
  int window_w_ = 1, window_h_ = 1;
  std::shared_ptr<const CompiledRules> rules_;
};

TileSet2D tileset_from_json(const nlohmann::json& j);
nlohmann::json tileset_to_json(const TileSet2D& ts);

}  // namespace subshift
