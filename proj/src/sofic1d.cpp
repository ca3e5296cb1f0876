#include "subshift/sofic1d.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? UINT64_MAX : s;
}

void check_word(const LabeledGraph& g, const Word& w) {
  for (Symbol s : w)
    if (s < 0 || static_cast<std::size_t>(s) >= g.alphabet().size())
      throw InputError("word symbol outside alphabet");
}

std::string subset_name(const LabeledGraph& g, const Bitset& s) {
  std::string name = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) name += ',';
    first = false;
    name += g.state_name(static_cast<int>(i));
  });
  return name + "}";
}

}  // namespace

TransitionRelation TransitionRelation::identity(std::size_t n) {
  TransitionRelation r(n);
  for (std::size_t i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

bool TransitionRelation::empty() const {
  for (const auto& row : rows_)
    if (row.any()) return false;
  return true;
}

std::vector<std::pair<int, int>> TransitionRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t p = 0; p < n_; ++p)
    rows_[p].for_each([&](std::size_t q) { out.emplace_back(static_cast<int>(p), static_cast<int>(q)); });
  return out;
}

TransitionRelation TransitionRelation::then(const TransitionRelation& next) const {
  TransitionRelation out(n_);
  for (std::size_t p = 0; p < n_; ++p) out.rows_[p] = next.image(rows_[p]);
  return out;
}

Bitset TransitionRelation::image(const Bitset& from) const {
  Bitset out(n_);
  from.for_each([&](std::size_t q) { out |= rows_[q]; });
  return out;
}

std::size_t TransitionRelation::hash() const {
  std::size_t h = n_;
  for (const auto& r : rows_) h = h * 0x9e3779b97f4a7c15ull + r.hash();
  return h;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

LabeledGraph trim(const LabeledGraph& g) {
  const std::size_t n = g.num_states();
  std::vector<bool> keep(n, true);
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (const auto& e : g.edges()) {
    ++outdeg[e.source];
    ++indeg[e.target];
  }
  std::deque<int> dead;
  for (std::size_t s = 0; s < n; ++s)
    if (indeg[s] == 0 || outdeg[s] == 0) {
      keep[s] = false;
      dead.push_back(static_cast<int>(s));
    }
  while (!dead.empty()) {
    int s = dead.front();
    dead.pop_front();
    for (int ei : g.out_edges(s)) {
      int t = g.edges()[ei].target;
      if (keep[t] && --indeg[t] == 0) {
        keep[t] = false;
        dead.push_back(t);
      }
    }
    for (int ei : g.in_edges(s)) {
      int t = g.edges()[ei].source;
      if (keep[t] && --outdeg[t] == 0) {
        keep[t] = false;
        dead.push_back(t);
      }
    }
  }
  return g.induced(keep);
}

bool is_trim(const LabeledGraph& g) { return trim(g).num_states() == g.num_states(); }

Bitset all_states(const LabeledGraph& g) { return Bitset::full(g.num_states()); }

Bitset step(const LabeledGraph& g, const Bitset& from, Symbol a) {
  Bitset out(g.num_states());
  from.for_each([&](std::size_t s) {
    for (int ei : g.out_edges(static_cast<int>(s))) {
      const auto& e = g.edges()[ei];
      if (e.label == a) out.set(static_cast<std::size_t>(e.target));
    }
  });
  return out;
}

Bitset step(const LabeledGraph& g, const Bitset& from, const Word& w) {
  Bitset cur = from;
  for (Symbol a : w) {
    if (cur.none()) break;
    cur = step(g, cur, a);
  }
  return cur;
}

bool accepts(const LabeledGraph& g, const Word& w) {
  check_word(g, w);
  if (g.empty()) return false;
  return step(g, all_states(g), w).any();
}

std::set<Word> language_words(const LabeledGraph& g, std::size_t n) {
  std::set<Word> out;
  if (g.empty()) return out;
  Word w;
  const auto k = static_cast<Symbol>(g.alphabet().size());
  auto rec = [&](auto&& self, const Bitset& cur) -> void {
    if (w.size() == n) {
      out.insert(w);
      return;
    }
    for (Symbol a = 0; a < k; ++a) {
      Bitset nxt = step(g, cur, a);
      if (nxt.none()) continue;
      w.push_back(a);
      self(self, nxt);
      w.pop_back();
    }
  };
  rec(rec, all_states(g));
  return out;
}

TransitionRelation symbol_relation(const LabeledGraph& g, Symbol a) {
  TransitionRelation r(g.num_states());
  for (const auto& e : g.edges())
    if (e.label == a) r.insert(e.source, e.target);
  return r;
}

TransitionRelation transition_relation(const LabeledGraph& g, const Word& w) {
  check_word(g, w);
  auto r = TransitionRelation::identity(g.num_states());
  for (Symbol a : w) r = r.then(symbol_relation(g, a));
  return r;
}

ContextPartition context_partition(const LabeledGraph& g, std::size_t probe_len) {
  ContextPartition out;
  if (g.empty()) {
    out.stabilized = true;
    return out;
  }
  const auto k = static_cast<Symbol>(g.alphabet().size());
  std::vector<TransitionRelation> gens;
  for (Symbol a = 0; a < k; ++a) gens.push_back(symbol_relation(g, a));

  struct LevelEntry {
    Word least;  // lexicographically least word of this length with the relation
    std::uint64_t count = 0;
  };
  std::unordered_map<TransitionRelation, std::size_t, TransitionRelationHash> known;  // -> class index
  std::map<TransitionRelation, LevelEntry> level;
  auto id = TransitionRelation::identity(g.num_states());
  level[id] = {{}, 1};
  known[id] = 0;
  out.classes.push_back({{}, id, 1});

  for (std::size_t len = 1; len <= probe_len; ++len) {
    std::map<TransitionRelation, LevelEntry> next;
    for (const auto& [rel, entry] : level) {
      for (Symbol a = 0; a < k; ++a) {
        auto r = rel.then(gens[a]);
        if (r.empty()) continue;
        Word w = entry.least;
        w.push_back(a);
        auto [it, fresh] = next.try_emplace(std::move(r), LevelEntry{w, 0});
        if (!fresh && w < it->second.least) it->second.least = std::move(w);
        it->second.count = sat_add(it->second.count, entry.count);
      }
    }
    bool added = false;
    for (const auto& [rel, entry] : next) {
      auto it = known.find(rel);
      if (it == known.end()) {
        known.emplace(rel, out.classes.size());
        out.classes.push_back({entry.least, rel, entry.count});
        added = true;
      } else {
        auto& cls = out.classes[it->second];
        cls.member_count = sat_add(cls.member_count, entry.count);
      }
    }
    if (!added && !out.stabilized) {
      out.stabilized = true;
      out.stabilization_length = len;
    }
    level = std::move(next);
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const ContextClass& a, const ContextClass& b) {
    return shortlex_less(a.representative, b.representative);
  });
  return out;
}

bool is_right_resolving(const LabeledGraph& g) {
  for (std::size_t s = 0; s < g.num_states(); ++s) {
    std::vector<bool> seen(g.alphabet().size(), false);
    for (int ei : g.out_edges(static_cast<int>(s))) {
      auto a = static_cast<std::size_t>(g.edges()[ei].label);
      if (seen[a]) return false;
      seen[a] = true;
    }
  }
  return true;
}

bool is_left_resolving(const LabeledGraph& g) { return is_right_resolving(g.reversed()); }

LabeledGraph resolve_right(const LabeledGraph& input) {
  LabeledGraph g = trim(input);
  if (is_right_resolving(g)) return g;
  const auto k = static_cast<Symbol>(g.alphabet().size());
  std::unordered_map<Bitset, int, BitsetHash> id;
  std::vector<Bitset> subsets;
  std::vector<Edge> edges;
  auto intern = [&](const Bitset& s) {
    auto [it, fresh] = id.try_emplace(s, static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(s);
    return it->second;
  };
  for (std::size_t q = 0; q < g.num_states(); ++q) {
    Bitset s(g.num_states());
    s.set(q);
    intern(s);
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      Bitset t = step(g, subsets[i], a);
      if (t.none()) continue;
      int j = intern(t);
      edges.push_back({static_cast<int>(i), a, j});
    }
  }
  std::vector<std::string> names;
  names.reserve(subsets.size());
  for (const auto& s : subsets) names.push_back(subset_name(g, s));
  return trim(LabeledGraph(g.alphabet(), std::move(names), std::move(edges)));
}

LabeledGraph resolve_left(const LabeledGraph& g) { return resolve_right(g.reversed()).reversed(); }

LabeledGraph from_forbidden_words(const Alphabet& alphabet, const std::set<Word>& forbidden) {
  std::size_t m = 0;
  for (const auto& w : forbidden) {
    for (Symbol s : w)
      if (s < 0 || static_cast<std::size_t>(s) >= alphabet.size())
        throw InputError("forbidden word symbol outside alphabet");
    m = std::max(m, w.size());
  }
  const auto k = static_cast<Symbol>(alphabet.size());
  if (forbidden.count(Word{})) return LabeledGraph(alphabet, {}, std::vector<Edge>{});
  // A word is clean if no forbidden word occurs as a suffix of it; applied at
  // every extension step this forbids all factors.
  auto suffix_clean = [&](const Word& w) {
    for (std::size_t len = 1; len <= std::min(m, w.size()); ++len)
      if (forbidden.count(Word(w.end() - static_cast<std::ptrdiff_t>(len), w.end()))) return false;
    return true;
  };
  if (m <= 1) {
    std::vector<Edge> edges;
    for (Symbol a = 0; a < k; ++a)
      if (!forbidden.count(Word{a})) edges.push_back({0, a, 0});
    return trim(LabeledGraph(alphabet, {"_"}, std::move(edges)));
  }
  std::vector<Word> states;
  Word cur;
  auto gen = [&](auto&& self) -> void {
    if (cur.size() == m - 1) {
      states.push_back(cur);
      return;
    }
    for (Symbol a = 0; a < k; ++a) {
      cur.push_back(a);
      if (suffix_clean(cur)) self(self);
      cur.pop_back();
    }
  };
  gen(gen);
  std::map<Word, int> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      Word ext = states[i];
      ext.push_back(a);
      if (!suffix_clean(ext)) continue;
      Word tail(ext.begin() + 1, ext.end());
      auto it = index.find(tail);
      if (it != index.end()) edges.push_back({static_cast<int>(i), a, it->second});
    }
  }
  std::vector<std::string> names;
  for (const auto& w : states) names.push_back(alphabet.format_word(w));
  return trim(LabeledGraph(alphabet, std::move(names), std::move(edges)));
}

}  // namespace subshift
