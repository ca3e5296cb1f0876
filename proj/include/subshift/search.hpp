#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "subshift/tileset.hpp"

namespace subshift {

struct Budget {
  std::uint64_t max_states = 10'000'000;    // search nodes plus memo entries
  std::uint64_t max_patterns = 10'000'000;  // emitted patterns
  double timeout_s = 60.0;
};

// Depth-first search for locally admissible fillings of a rectangle.
//
// Cells of `pins` that are not holes are fixed; holes are free. Pair rules
// are enforced by arc consistency after every assignment, larger forbidden
// patterns as soon as all their cells are assigned. Values are tried in
// alphabet order along `order` (row-major from the bottom row when empty),
// so solutions come out in lexicographic order of that cell sequence.
class Solver {
 public:
  Solver(const TileSet2D& ts, const Pattern2D& pins, Budget budget = {}, std::vector<int> order = {});

  std::optional<Pattern2D> first();
  // Number of solutions, stopping early once `cap` is reached.
  std::uint64_t count(std::uint64_t cap = UINT64_MAX);
  // Calls `visit` per solution until it returns false.
  void enumerate(const std::function<bool(const Pattern2D&)>& visit);
  // True if some assignment of the first `split` cells of the order passed
  // to the constructor has at least two completions.
  bool split_with_two_completions(std::size_t split);

  std::uint64_t nodes() const { return nodes_; }
  int width() const { return w_; }
  int height() const { return h_; }

 private:
  struct TrailEntry {
    int cell;
    Bitset old;
    bool was_assigned;
  };

  bool assign(int cell, Symbol s);
  bool propagate(std::vector<int>& queue);
  bool check_shapes(int cell) const;
  void undo(std::size_t mark);
  void save(int cell);
  void tick();
  Pattern2D snapshot() const;
  std::vector<Symbol> boundary_key(int y) const;

  bool dfs_first(std::size_t pos, Pattern2D& out);
  std::uint64_t dfs_count(std::size_t pos, std::uint64_t cap);
  std::uint64_t dfs_count_rows(std::size_t pos);
  bool dfs_enumerate(std::size_t pos, const std::function<bool(const Pattern2D&)>& visit);
  bool dfs_split(std::size_t pos, std::size_t split);

  const TileSet2D& ts_;
  const CompiledRules& rules_;
  Budget budget_;
  int w_, h_;
  int x0_, y0_;
  std::vector<Bitset> dom_;
  std::vector<char> assigned_;
  std::vector<TrailEntry> trail_;
  std::vector<int> order_;
  std::vector<int> given_;
  std::vector<char> pinned_;
  bool row_major_ = true;
  bool consistent_ = true;
  std::uint64_t nodes_ = 0, emitted_ = 0;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::size_t> row_start_;
  std::vector<std::unordered_map<std::vector<Symbol>, std::uint64_t, SymbolVecHash>> memo_;
  std::uint64_t memo_entries_ = 0;
};

}  // namespace subshift
