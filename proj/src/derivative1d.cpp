#include "subshift/derivative1d.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "subshift/errors.hpp"

namespace subshift {

const char* to_string(RayCardinality c) {
  switch (c) {
    case RayCardinality::Zero: return "Zero";
    case RayCardinality::FinitePositive: return "FinitePositive";
    case RayCardinality::Infinite: return "Infinite";
  }
  return "?";
}

const char* to_string(CylinderClass c) {
  switch (c) {
    case CylinderClass::Empty: return "Empty";
    case CylinderClass::Finite: return "Finite";
    case CylinderClass::Infinite: return "Infinite";
  }
  return "?";
}

namespace {

// Successor lists in the ray direction.
std::vector<std::vector<int>> successors(const LabeledGraph& g, Side side) {
  std::vector<std::vector<int>> adj(g.num_states());
  for (const auto& e : g.edges()) {
    if (side == Side::Right)
      adj[e.source].push_back(e.target);
    else
      adj[e.target].push_back(e.source);
  }
  return adj;
}

std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& adj) {
  std::vector<std::vector<int>> t(adj.size());
  for (std::size_t s = 0; s < adj.size(); ++s)
    for (int d : adj[s]) t[d].push_back(static_cast<int>(s));
  return t;
}

// States from which some node in `seeds` is reachable (seeds included).
std::vector<bool> can_reach(const std::vector<std::vector<int>>& adj, const std::vector<bool>& seeds) {
  auto back = transpose(adj);
  std::vector<bool> mark = seeds;
  std::deque<int> q;
  for (std::size_t s = 0; s < seeds.size(); ++s)
    if (seeds[s]) q.push_back(static_cast<int>(s));
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    for (int p : back[s])
      if (!mark[p]) {
        mark[p] = true;
        q.push_back(p);
      }
  }
  return mark;
}

// States lying on a cycle, via iterative Tarjan.
std::vector<bool> on_cycle(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> onstack(n, false), cyclic(n, false);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> work{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    onstack[root] = true;
    while (!work.empty()) {
      auto& [v, i] = work.back();
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          onstack[w] = true;
          work.push_back({w, 0});
        } else if (onstack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<int> members;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          onstack[w] = false;
          comp[w] = ncomp;
          members.push_back(w);
        } while (w != v);
        bool cyc = members.size() > 1;
        if (!cyc)
          for (int d : adj[v]) cyc = cyc || d == v;
        if (cyc)
          for (int m : members) cyclic[m] = true;
        ++ncomp;
      }
      int done = v;
      work.pop_back();
      if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[done]);
    }
  }
  return cyclic;
}

// States with at least one infinite path in the ray direction.
std::vector<bool> live_states(const std::vector<std::vector<int>>& adj) {
  auto cyc = on_cycle(adj);
  return can_reach(adj, cyc);
}

void require_resolving(const LabeledGraph& g, Side side) {
  bool ok = side == Side::Right ? is_right_resolving(g) : is_left_resolving(g);
  if (!ok)
    throw ContractError(side == Side::Right ? "ray counting needs a right-resolving graph"
                                            : "ray counting needs a left-resolving graph");
}


}  // namespace

std::vector<bool> infinite_ray_states(const LabeledGraph& g, Side side) {
  require_resolving(g, side);
  auto adj = successors(g, side);
  auto live = live_states(adj);
  // Restrict to the live part: a branch into a dead end adds no ray.
  std::vector<std::vector<int>> sub(adj.size());
  for (std::size_t s = 0; s < adj.size(); ++s)
    if (live[s])
      for (int d : adj[s])
        if (live[d]) sub[s].push_back(d);
  std::vector<bool> branching(adj.size(), false);
  for (std::size_t s = 0; s < adj.size(); ++s) branching[s] = sub[s].size() >= 2;
  auto cyc = on_cycle(sub);
  auto reaches_branch = can_reach(sub, branching);
  std::vector<bool> pump(adj.size(), false);
  for (std::size_t s = 0; s < adj.size(); ++s) pump[s] = cyc[s] && reaches_branch[s];
  auto inf = can_reach(sub, pump);
  for (std::size_t s = 0; s < adj.size(); ++s) inf[s] = inf[s] && live[s];
  return inf;
}

RayCardinality ray_cardinality(const LabeledGraph& g, int state, Side side) {
  if (state < 0 || static_cast<std::size_t>(state) >= g.num_states()) throw InputError("state out of range");
  auto inf = infinite_ray_states(g, side);
  if (inf[state]) return RayCardinality::Infinite;
  auto live = live_states(successors(g, side));
  return live[state] ? RayCardinality::FinitePositive : RayCardinality::Zero;
}

ResolvedCompanions resolve_companions(const LabeledGraph& g) {
  ResolvedCompanions rc;
  rc.base = trim(g);
  rc.right = resolve_right(rc.base);
  rc.left = resolve_left(rc.base);
  rc.right_infinite = infinite_ray_states(rc.right, Side::Right);
  rc.left_infinite = infinite_ray_states(rc.left, Side::Left);
  return rc;
}

CylinderClass cylinder_class(const ResolvedCompanions& rc, const Word& w) {
  if (!accepts(rc.base, w)) return CylinderClass::Empty;
  Bitset ends = step(rc.right, all_states(rc.right), w);
  bool inf = false;
  ends.for_each([&](std::size_t q) { inf = inf || rc.right_infinite[q]; });
  if (inf) return CylinderClass::Infinite;
  Word rev(w.rbegin(), w.rend());
  LabeledGraph back = rc.left.reversed();
  Bitset starts = step(back, all_states(back), rev);
  starts.for_each([&](std::size_t p) { inf = inf || rc.left_infinite[p]; });
  return inf ? CylinderClass::Infinite : CylinderClass::Finite;
}

CylinderClass cylinder_class(const LabeledGraph& g, const Word& w) {
  return cylinder_class(resolve_companions(g), w);
}

LabeledGraph derive(const LabeledGraph& g) {
  auto rc = resolve_companions(g);
  if (rc.base.empty()) return rc.base;
  std::vector<std::string> names;
  std::vector<Edge> edges;
  auto add_part = [&](const LabeledGraph& part, const std::vector<bool>& keep, const std::string& prefix) {
    std::vector<int> remap(part.num_states(), -1);
    for (std::size_t s = 0; s < part.num_states(); ++s)
      if (keep[s]) {
        remap[s] = static_cast<int>(names.size());
        names.push_back(prefix + part.state_name(static_cast<int>(s)));
      }
    for (const auto& e : part.edges())
      if (remap[e.source] >= 0 && remap[e.target] >= 0) edges.push_back({remap[e.source], e.label, remap[e.target]});
  };
  add_part(rc.right, rc.right_infinite, "R");
  add_part(rc.left, rc.left_infinite, "L");
  return trim(LabeledGraph(rc.base.alphabet(), std::move(names), std::move(edges)));
}

bool language_included(const LabeledGraph& g0, const LabeledGraph& h0) {
  LabeledGraph g = trim(g0), h = trim(h0);
  if (g.empty()) return true;
  if (h.empty()) return false;
  if (!(g.alphabet() == h.alphabet())) throw InputError("language comparison across different alphabets");
  std::unordered_map<Bitset, std::vector<bool>, BitsetHash> seen;
  std::deque<std::pair<int, Bitset>> queue;
  auto visit = [&](int p, const Bitset& s) {
    auto& row = seen[s];
    if (row.empty()) row.assign(g.num_states(), false);
    if (row[p]) return;
    row[p] = true;
    queue.emplace_back(p, s);
  };
  Bitset all = all_states(h);
  for (std::size_t p = 0; p < g.num_states(); ++p) visit(static_cast<int>(p), all);
  while (!queue.empty()) {
    auto [p, s] = queue.front();
    queue.pop_front();
    for (int ei : g.out_edges(p)) {
      const auto& e = g.edges()[ei];
      Bitset t = step(h, s, e.label);
      if (t.none()) return false;
      visit(e.target, t);
    }
  }
  return true;
}

bool language_equal(const LabeledGraph& g, const LabeledGraph& h) {
  return language_included(g, h) && language_included(h, g);
}

DerivativeChain rank_chain(const LabeledGraph& g) {
  DerivativeChain chain;
  chain.presentations.push_back(trim(g));
  // Each proper step strictly lowers the number of context classes, so the
  // loop is finite; the cap only guards against a broken invariant.
  for (std::size_t guard = 0; guard < 100000; ++guard) {
    const auto& cur = chain.presentations.back();
    LabeledGraph next = derive(cur);
    if (language_included(cur, next)) {
      chain.rank = chain.presentations.size() - 1;
      chain.perfect_kernel_empty = cur.empty();
      return chain;
    }
    chain.presentations.push_back(std::move(next));
  }
  throw std::logic_error("derivative chain did not reach a fixpoint");
}

bool is_countable(const LabeledGraph& g) { return rank_chain(g).perfect_kernel_empty; }

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? UINT64_MAX : s;
}
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

// Counts words v of length k with step(S, v) nonempty, memoized on (S, k).
class ForwardCounter {
 public:
  explicit ForwardCounter(const LabeledGraph& g) : g_(g) {}
  std::uint64_t operator()(const Bitset& s, std::size_t k) {
    if (s.none()) return 0;
    if (k == 0) return 1;
    auto& row = memo_[s];
    if (row.size() > k && row[k] != kUnknown) return row[k];
    std::uint64_t total = 0;
    for (Symbol a = 0; a < static_cast<Symbol>(g_.alphabet().size()); ++a)
      total = sat_add(total, (*this)(step(g_, s, a), k - 1));
    auto& again = memo_[s];
    if (again.size() <= k) again.resize(k + 1, kUnknown);
    again[k] = total;
    return total;
  }

 private:
  static constexpr std::uint64_t kUnknown = UINT64_MAX - 1;
  const LabeledGraph& g_;
  std::unordered_map<Bitset, std::vector<std::uint64_t>, BitsetHash> memo_;
};

}  // namespace

std::vector<std::uint64_t> cylinder_growth_oracle(const LabeledGraph& g0, const Word& w, std::size_t k_max) {
  LabeledGraph g = trim(g0);
  std::vector<std::uint64_t> counts;
  if (g.empty()) return std::vector<std::uint64_t>(k_max + 1, 0);
  for (Symbol s : w)
    if (s < 0 || static_cast<std::size_t>(s) >= g.alphabet().size()) throw InputError("word symbol outside alphabet");
  ForwardCounter right(g);
  // Left contexts: how many words u of length k lead from anywhere to each set.
  std::map<Bitset, std::uint64_t> left{{all_states(g), 1}};
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::uint64_t c = 0;
    for (const auto& [set, cnt] : left) c = sat_add(c, sat_mul(cnt, right(step(g, set, w), k)));
    counts.push_back(c);
    if (k == k_max) break;
    std::map<Bitset, std::uint64_t> next;
    for (const auto& [set, cnt] : left)
      for (Symbol a = 0; a < static_cast<Symbol>(g.alphabet().size()); ++a) {
        Bitset t = step(g, set, a);
        if (t.any()) next[t] = sat_add(next[t], cnt);
      }
    left = std::move(next);
  }
  return counts;
}

GrowthVerdict growth_verdict(const LabeledGraph& g0, const Word& w) {
  LabeledGraph g = trim(g0);
  GrowthVerdict v;
  const std::size_t n = g.num_states();
  v.plateau = n * n + 1;
  std::size_t horizon = (n < 10 ? (std::size_t{1} << n) : 1024) + v.plateau + 1;
  v.counts = cylinder_growth_oracle(g, w, horizon);
  if (v.counts.empty() || v.counts[0] == 0) return v;  // empty cylinder
  std::size_t run = 1;
  for (std::size_t k = 1; k < v.counts.size(); ++k) {
    if (v.counts[k] == UINT64_MAX) break;
    run = v.counts[k] == v.counts[k - 1] ? run + 1 : 1;
    if (run >= v.plateau) return v;
  }
  v.infinite = true;
  return v;
}

}  // namespace subshift
