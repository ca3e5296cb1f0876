#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "subshift/bitset.hpp"
#include "subshift/graph.hpp"

namespace subshift {

// Boolean n×n matrix: which (p, q) are joined by a path carrying some word.
class TransitionRelation {
 public:
  TransitionRelation() = default;
  explicit TransitionRelation(std::size_t n) : n_(n), rows_(n, Bitset(n)) {}
  static TransitionRelation identity(std::size_t n);

  std::size_t size() const { return n_; }
  bool contains(std::size_t p, std::size_t q) const { return rows_[p].test(q); }
  void insert(std::size_t p, std::size_t q) { rows_[p].set(q); }
  const Bitset& row(std::size_t p) const { return rows_[p]; }
  bool empty() const;
  std::vector<std::pair<int, int>> pairs() const;

  // Relation of the word u·v given this = rel(u) and next = rel(v).
  TransitionRelation then(const TransitionRelation& next) const;
  // Image of a state set.
  Bitset image(const Bitset& from) const;

  friend bool operator==(const TransitionRelation&, const TransitionRelation&) = default;
  friend auto operator<=>(const TransitionRelation& a, const TransitionRelation& b) {
    return a.rows_ <=> b.rows_;
  }
  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<Bitset> rows_;
};

struct TransitionRelationHash {
  std::size_t operator()(const TransitionRelation& r) const { return r.hash(); }
};

struct ContextClass {
  Word representative;  // shortlex-least word with this relation
  TransitionRelation relation;
  std::uint64_t member_count = 0;  // words of length <= probe_len (saturating)
};

struct ContextPartition {
  std::vector<ContextClass> classes;  // ordered by representative, shortlex
  bool stabilized = false;
  // Length after which no new relation appeared; meaningful when stabilized.
  std::size_t stabilization_length = 0;
};

LabeledGraph trim(const LabeledGraph& g);
bool is_trim(const LabeledGraph& g);

// One-step successor set for symbol a.
Bitset step(const LabeledGraph& g, const Bitset& from, Symbol a);
Bitset step(const LabeledGraph& g, const Bitset& from, const Word& w);
Bitset all_states(const LabeledGraph& g);

// w labels some path of g. On a trim graph this is membership in B(X).
bool accepts(const LabeledGraph& g, const Word& w);

std::set<Word> language_words(const LabeledGraph& g, std::size_t n);

TransitionRelation symbol_relation(const LabeledGraph& g, Symbol a);
TransitionRelation transition_relation(const LabeledGraph& g, const Word& w);

ContextPartition context_partition(const LabeledGraph& g, std::size_t probe_len);

bool is_right_resolving(const LabeledGraph& g);
bool is_left_resolving(const LabeledGraph& g);
LabeledGraph resolve_right(const LabeledGraph& g);
LabeledGraph resolve_left(const LabeledGraph& g);

LabeledGraph from_forbidden_words(const Alphabet& alphabet, const std::set<Word>& forbidden);

// Shortlex order: shorter first, then lexicographic by symbol index.
bool shortlex_less(const Word& a, const Word& b);

}  // namespace subshift
