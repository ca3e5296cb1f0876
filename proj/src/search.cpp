#include "subshift/search.hpp"

#include <algorithm>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? UINT64_MAX : s;
}

}  // namespace

Solver::Solver(const TileSet2D& ts, const Pattern2D& pins, Budget budget, std::vector<int> order)
    : ts_(ts),
      rules_(ts.rules()),
      budget_(budget),
      w_(pins.width),
      h_(pins.height),
      x0_(pins.x0),
      y0_(pins.y0),
      start_(std::chrono::steady_clock::now()) {
  if (w_ <= 0 || h_ <= 0) throw InputError("search window must be at least 1x1");
  const int n = w_ * h_;
  const std::size_t k = ts.alphabet().size();
  dom_.assign(static_cast<std::size_t>(n), rules_.allowed);
  assigned_.assign(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) {
    Symbol s = pins.cells[static_cast<std::size_t>(c)];
    if (s == kHole) continue;
    if (s < 0 || static_cast<std::size_t>(s) >= k) throw InputError("pattern symbol outside alphabet");
    Bitset one(k);
    if (rules_.allowed.test(static_cast<std::size_t>(s))) one.set(static_cast<std::size_t>(s));
    dom_[c] = one;
    assigned_[c] = 1;
    if (one.none()) consistent_ = false;
  }
  pinned_ = assigned_;
  given_ = order;
  if (order.empty()) {
    for (int c = 0; c < n; ++c)
      if (!assigned_[c]) order_.push_back(c);
  } else {
    row_major_ = false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int c : order) {
      if (c < 0 || c >= n || seen[c]) throw InputError("cell order must list distinct cells of the window");
      seen[c] = 1;
      if (!assigned_[c]) order_.push_back(c);
    }
    for (int c = 0; c < n; ++c)
      if (!seen[c] && !assigned_[c]) order_.push_back(c);
  }
  if (consistent_) {
    for (int c = 0; c < n && consistent_; ++c)
      if (assigned_[c]) consistent_ = check_shapes(c);
  }
  if (consistent_) {
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) queue[c] = c;
    consistent_ = propagate(queue);
  }
  trail_.clear();
  row_start_.assign(static_cast<std::size_t>(h_) + 1, order_.size());
  for (std::size_t p = order_.size(); p-- > 0;) row_start_[order_[p] / w_] = p;
  for (int y = h_ - 1; y >= 0; --y) row_start_[y] = std::min(row_start_[y], row_start_[y + 1]);
  memo_.resize(static_cast<std::size_t>(h_) + 1);
}

void Solver::tick() {
  ++nodes_;
  if (nodes_ + memo_entries_ > budget_.max_states)
    throw BudgetError("search state budget exceeded", emitted_);
  if ((nodes_ & 1023) == 0) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (secs > budget_.timeout_s) throw BudgetError("search timed out", emitted_);
  }
}

void Solver::save(int cell) { trail_.push_back({cell, dom_[cell], assigned_[cell] != 0}); }

void Solver::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    auto& e = trail_.back();
    dom_[e.cell] = std::move(e.old);
    assigned_[e.cell] = e.was_assigned;
    trail_.pop_back();
  }
}

bool Solver::propagate(std::vector<int>& queue) {
  const std::size_t k = ts_.alphabet().size();
  Bitset support(k);
  auto revise = [&](int from, int to, const std::vector<Bitset>& table) {
    support.clear();
    dom_[from].for_each([&](std::size_t s) { support |= table[s]; });
    if (dom_[to].subset_of(support)) return true;
    save(to);
    dom_[to] &= support;
    if (dom_[to].none()) return false;
    queue.push_back(to);
    return true;
  };
  while (!queue.empty()) {
    int c = queue.back();
    queue.pop_back();
    int x = c % w_, y = c / w_;
    if (x + 1 < w_ && !revise(c, c + 1, rules_.right_of)) return false;
    if (x > 0 && !revise(c, c - 1, rules_.left_of)) return false;
    if (y + 1 < h_ && !revise(c, c + w_, rules_.above)) return false;
    if (y > 0 && !revise(c, c - w_, rules_.below)) return false;
  }
  return true;
}

bool Solver::check_shapes(int cell) const {
  if (rules_.shapes.empty()) return true;
  const int x = cell % w_, y = cell / w_;
  std::vector<Symbol> key;
  for (const auto& shape : rules_.shapes) {
    for (int oy = std::max(0, y - shape.h + 1); oy <= y && oy + shape.h <= h_; ++oy)
      for (int ox = std::max(0, x - shape.w + 1); ox <= x && ox + shape.w <= w_; ++ox) {
        key.clear();
        bool full = true;
        for (int j = 0; j < shape.h && full; ++j)
          for (int i = 0; i < shape.w; ++i) {
            int c = (oy + j) * w_ + ox + i;
            if (!assigned_[c]) {
              full = false;
              break;
            }
            key.push_back(static_cast<Symbol>(dom_[c].first()));
          }
        if (full && shape.forbidden.count(key)) return false;
      }
  }
  return true;
}

bool Solver::assign(int cell, Symbol s) {
  save(cell);
  Bitset one(ts_.alphabet().size());
  one.set(static_cast<std::size_t>(s));
  dom_[cell] = one;
  assigned_[cell] = 1;
  if (!check_shapes(cell)) return false;
  std::vector<int> queue{cell};
  return propagate(queue);
}

// Pinned cells further up are fixed, so the rows directly below y are all a
// completion of rows y.. can depend on.
std::vector<Symbol> Solver::boundary_key(int y) const {
  std::vector<Symbol> key;
  const int lo = std::max(0, y - std::max(1, rules_.reach_up));
  for (int c = lo * w_; c < y * w_; ++c) key.push_back(static_cast<Symbol>(dom_[c].first()));
  return key;
}

Pattern2D Solver::snapshot() const {
  Pattern2D p(w_, h_, kHole, x0_, y0_);
  for (std::size_t c = 0; c < dom_.size(); ++c) p.cells[c] = static_cast<Symbol>(dom_[c].first());
  return p;
}

bool Solver::dfs_first(std::size_t pos, Pattern2D& out) {
  tick();
  if (pos == order_.size()) {
    out = snapshot();
    return true;
  }
  const int cell = order_[pos];
  // In row-major order a dead boundary stays dead: remember it.
  std::vector<Symbol> key;
  const int y = cell / w_;
  bool memo_here = row_major_ && pos == row_start_[y] && y > 0;
  if (memo_here) {
    key = boundary_key(y);
    if (memo_[y].count(key)) return false;
  }
  Bitset choices = dom_[cell];
  for (std::size_t s = choices.first(); s < choices.size(); s = choices.next(s + 1)) {
    std::size_t mark = trail_.size();
    bool ok = assign(cell, static_cast<Symbol>(s)) && dfs_first(pos + 1, out);
    undo(mark);
    if (ok) return true;
  }
  if (memo_here) {
    memo_[y].emplace(std::move(key), 0);
    ++memo_entries_;
  }
  return false;
}

std::optional<Pattern2D> Solver::first() {
  if (!consistent_) return std::nullopt;
  Pattern2D out;
  if (dfs_first(0, out)) return out;
  return std::nullopt;
}

std::uint64_t Solver::dfs_count(std::size_t pos, std::uint64_t cap) {
  tick();
  if (pos == order_.size()) return 1;
  const int cell = order_[pos];
  Bitset choices = dom_[cell];
  std::uint64_t total = 0;
  for (std::size_t s = choices.first(); s < choices.size() && total < cap; s = choices.next(s + 1)) {
    std::size_t mark = trail_.size();
    if (assign(cell, static_cast<Symbol>(s))) total = sat_add(total, dfs_count(pos + 1, cap - total));
    undo(mark);
  }
  return total;
}

// Counting with memoization at row starts: the number of completions of
// rows y.. depends only on the `reach_up` rows directly below.
std::uint64_t Solver::dfs_count_rows(std::size_t pos) {
  tick();
  if (pos == order_.size()) return 1;
  const int cell = order_[pos];
  const int y = cell / w_;
  std::vector<Symbol> key;
  bool memo_here = pos == row_start_[y] && y > 0;
  if (memo_here) {
    key = boundary_key(y);
    auto it = memo_[y].find(key);
    if (it != memo_[y].end()) return it->second;
  }
  Bitset choices = dom_[cell];
  std::uint64_t total = 0;
  for (std::size_t s = choices.first(); s < choices.size(); s = choices.next(s + 1)) {
    std::size_t mark = trail_.size();
    if (assign(cell, static_cast<Symbol>(s))) total = sat_add(total, dfs_count_rows(pos + 1));
    undo(mark);
  }
  if (memo_here) {
    memo_[y].emplace(std::move(key), total);
    ++memo_entries_;
  }
  emitted_ = std::max(emitted_, total);
  return total;
}

std::uint64_t Solver::count(std::uint64_t cap) {
  if (!consistent_) return 0;
  if (row_major_ && cap == UINT64_MAX) return dfs_count_rows(0);
  return dfs_count(0, cap);
}

bool Solver::dfs_enumerate(std::size_t pos, const std::function<bool(const Pattern2D&)>& visit) {
  tick();
  if (pos == order_.size()) {
    if (++emitted_ > budget_.max_patterns) throw BudgetError("pattern budget exceeded", emitted_ - 1);
    return visit(snapshot());
  }
  const int cell = order_[pos];
  Bitset choices = dom_[cell];
  for (std::size_t s = choices.first(); s < choices.size(); s = choices.next(s + 1)) {
    std::size_t mark = trail_.size();
    bool keep_going = true;
    if (assign(cell, static_cast<Symbol>(s))) keep_going = dfs_enumerate(pos + 1, visit);
    undo(mark);
    if (!keep_going) return false;
  }
  return true;
}

void Solver::enumerate(const std::function<bool(const Pattern2D&)>& visit) {
  if (!consistent_) return;
  dfs_enumerate(0, visit);
}

bool Solver::dfs_split(std::size_t pos, std::size_t split) {
  tick();
  if (pos == split) return dfs_count(pos, 2) >= 2;
  const int cell = order_[pos];
  Bitset choices = dom_[cell];
  for (std::size_t s = choices.first(); s < choices.size(); s = choices.next(s + 1)) {
    std::size_t mark = trail_.size();
    bool hit = assign(cell, static_cast<Symbol>(s)) && dfs_split(pos + 1, split);
    undo(mark);
    if (hit) return true;
  }
  return false;
}

bool Solver::split_with_two_completions(std::size_t split) {
  if (!consistent_) return false;
  // Translate a prefix length of the caller's order into one of order_,
  // which skips pinned cells.
  std::size_t free = 0;
  for (std::size_t i = 0; i < std::min(split, given_.size()); ++i)
    if (!pinned_[given_[i]]) ++free;
  return dfs_split(0, free);
}

}  // namespace subshift
