#include "subshift/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "subshift/errors.hpp"

namespace subshift {

LabeledGraph::LabeledGraph(Alphabet alphabet, std::vector<std::string> states,
                           std::vector<std::tuple<std::string, std::string, std::string>> edges)
    : alphabet_(std::move(alphabet)) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < states.size(); ++i)
    if (!idx.emplace(states[i], static_cast<int>(i)).second)
      throw InputError("duplicate state '" + states[i] + "'");
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [src, lab, dst] : edges) {
    auto s = idx.find(src), t = idx.find(dst);
    if (s == idx.end()) throw InputError("edge source '" + src + "' is not a declared state");
    if (t == idx.end()) throw InputError("edge target '" + dst + "' is not a declared state");
    es.push_back({s->second, alphabet_.index(lab), t->second});
  }
  *this = LabeledGraph(alphabet_, std::move(states), std::move(es));
}

LabeledGraph::LabeledGraph(Alphabet alphabet, std::vector<std::string> states, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)) {
  const int n = static_cast<int>(states.size());
  std::vector<int> order(states.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return states[a] < states[b]; });
  std::vector<int> rank(states.size());
  for (int i = 0; i < n; ++i) {
    rank[order[i]] = i;
    if (i && states[order[i]] == states[order[i - 1]])
      throw InputError("duplicate state '" + states[order[i]] + "'");
  }
  states_.reserve(states.size());
  for (int i : order) states_.push_back(std::move(states[i]));
  for (auto& e : edges) {
    if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n)
      throw InputError("edge endpoint out of range");
    if (e.label < 0 || static_cast<std::size_t>(e.label) >= alphabet_.size())
      throw InputError("edge label out of range");
    edges_.push_back({rank[e.source], e.label, rank[e.target]});
  }
  finalize();
}

void LabeledGraph::finalize() {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  out_.assign(states_.size(), {});
  in_.assign(states_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_[edges_[i].source].push_back(static_cast<int>(i));
    in_[edges_[i].target].push_back(static_cast<int>(i));
  }
}

int LabeledGraph::state_index(const std::string& name) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), name);
  if (it == states_.end() || *it != name) throw InputError("unknown state '" + name + "'");
  return static_cast<int>(it - states_.begin());
}

LabeledGraph LabeledGraph::induced(const std::vector<bool>& keep) const {
  std::vector<int> remap(states_.size(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (keep[i]) {
      remap[i] = static_cast<int>(names.size());
      names.push_back(states_[i]);
    }
  std::vector<Edge> es;
  for (const auto& e : edges_)
    if (remap[e.source] >= 0 && remap[e.target] >= 0)
      es.push_back({remap[e.source], e.label, remap[e.target]});
  return LabeledGraph(alphabet_, std::move(names), std::move(es));
}

LabeledGraph LabeledGraph::reversed() const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const auto& e : edges_) es.push_back({e.target, e.label, e.source});
  return LabeledGraph(alphabet_, states_, std::move(es));
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
  try {
    Alphabet a(j.at("alphabet").get<std::vector<std::string>>());
    auto states = j.at("states").get<std::vector<std::string>>();
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw InputError("edge must be [source, label, target]");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>());
    }
    return LabeledGraph(std::move(a), std::move(states), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad graph JSON: ") + ex.what());
  }
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({g.state_name(e.source), g.alphabet().name(e.label), g.state_name(e.target)});
  return {{"alphabet", g.alphabet().symbols()}, {"states", g.states()}, {"edges", edges}};
}

}  // namespace subshift
