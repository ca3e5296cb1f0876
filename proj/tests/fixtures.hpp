#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "subshift/graph.hpp"
#include "subshift/sofic1d.hpp"

namespace fixtures {

using namespace subshift;

inline Alphabet binary() { return Alphabet({"0", "1"}); }

inline LabeledGraph golden_mean() {
  return LabeledGraph(binary(), {"q0", "q1"}, {{"q0", "0", "q0"}, {"q0", "1", "q1"}, {"q1", "0", "q0"}});
}

inline LabeledGraph sunny_side_up() {
  return LabeledGraph(binary(), {"L", "R"}, {{"L", "0", "L"}, {"L", "1", "R"}, {"R", "0", "R"}});
}

// 0^inf, 1^inf and the orbit of ...000111...
inline LabeledGraph two_loops() {
  return LabeledGraph(binary(), {"L", "R"}, {{"L", "0", "L"}, {"L", "1", "R"}, {"R", "1", "R"}});
}

inline LabeledGraph full_shift(int k) {
  std::vector<std::string> syms;
  for (int i = 0; i < k; ++i) syms.push_back(std::to_string(i));
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (auto& s : syms) edges.emplace_back("s", s, "s");
  return LabeledGraph(Alphabet(syms), {"s"}, edges);
}

inline Word word(const LabeledGraph& g, const std::string& text) { return g.alphabet().parse_word(text); }

// Random graph on up to `max_states` states over {0,1}, trimmed; retried
// until nonempty.
inline LabeledGraph random_trim_graph(std::mt19937_64& rng, int max_states, double density = 0.35) {
  while (true) {
    int n = std::uniform_int_distribution<int>(1, max_states)(rng);
    std::bernoulli_distribution coin(density);
    std::vector<std::string> states;
    for (int i = 0; i < n; ++i) states.push_back("s" + std::to_string(i));
    std::vector<Edge> edges;
    for (int p = 0; p < n; ++p)
      for (int a = 0; a < 2; ++a)
        for (int q = 0; q < n; ++q)
          if (coin(rng)) edges.push_back({p, a, q});
    LabeledGraph g = trim(LabeledGraph(binary(), states, edges));
    if (!g.empty()) return g;
  }
}

inline std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::size_t a = 0; a < k; ++a) {
        Word v = w;
        v.push_back(static_cast<Symbol>(a));
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Path-by-path oracle: does some path of g carry w? No subset stepping.
inline bool path_exists(const LabeledGraph& g, const Word& w) {
  auto rec = [&](auto&& self, int s, std::size_t i) -> bool {
    if (i == w.size()) return true;
    for (int ei : g.out_edges(s)) {
      const auto& e = g.edges()[ei];
      if (e.label == w[i] && self(self, e.target, i + 1)) return true;
    }
    return false;
  };
  for (std::size_t s = 0; s < g.num_states(); ++s)
    if (rec(rec, static_cast<int>(s), 0)) return true;
  return false;
}

inline std::set<std::pair<int, int>> path_relation(const LabeledGraph& g, const Word& w) {
  std::set<std::pair<int, int>> out;
  auto rec = [&](auto&& self, int start, int s, std::size_t i) -> void {
    if (i == w.size()) {
      out.insert({start, s});
      return;
    }
    for (int ei : g.out_edges(s)) {
      const auto& e = g.edges()[ei];
      if (e.label == w[i]) self(self, start, e.target, i + 1);
    }
  };
  for (std::size_t s = 0; s < g.num_states(); ++s) rec(rec, static_cast<int>(s), static_cast<int>(s), 0);
  return out;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace fixtures
