#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "subshift/alphabet.hpp"

namespace subshift {

struct Edge {
  int source;
  Symbol label;
  int target;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Edge-labeled directed graph presenting a one-dimensional sofic shift.
// States are kept sorted by name and edges are deduplicated, so two graphs
// built from the same data compare equal.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(Alphabet alphabet, std::vector<std::string> states,
               std::vector<std::tuple<std::string, std::string, std::string>> edges);
  // Index-based construction; `states` need not be sorted.
  LabeledGraph(Alphabet alphabet, std::vector<std::string> states, std::vector<Edge> edges);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(int s) const { return states_.at(static_cast<std::size_t>(s)); }
  int state_index(const std::string& name) const;  // throws InputError
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int s) const { return out_[static_cast<std::size_t>(s)]; }
  const std::vector<int>& in_edges(int s) const { return in_[static_cast<std::size_t>(s)]; }

  // Subgraph on the given states, keeping their names.
  LabeledGraph induced(const std::vector<bool>& keep) const;
  LabeledGraph reversed() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.alphabet_ == b.alphabet_ && a.states_ == b.states_ && a.edges_ == b.edges_;
  }

 private:
  void finalize();

  Alphabet alphabet_;
  std::vector<std::string> states_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_, in_;
};

LabeledGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const LabeledGraph& g);

}  // namespace subshift
