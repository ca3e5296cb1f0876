#pragma once

#include <cstdint>
#include <vector>

#include "subshift/sofic1d.hpp"

namespace subshift {

enum class Side { Left, Right };
enum class RayCardinality { Zero, FinitePositive, Infinite };
enum class CylinderClass { Empty, Finite, Infinite };

const char* to_string(RayCardinality c);
const char* to_string(CylinderClass c);

// Right rays from `state` (left rays into it). The graph must be resolving on
// that side; ContractError otherwise.
RayCardinality ray_cardinality(const LabeledGraph& g, int state, Side side);

// Per-state "has infinitely many rays" flags for a graph resolving on `side`.
std::vector<bool> infinite_ray_states(const LabeledGraph& g, Side side);

// Trimmed graph together with its left- and right-resolved companions and
// the infinite-ray flags on each, computed once and reused.
struct ResolvedCompanions {
  LabeledGraph base;
  LabeledGraph right;
  LabeledGraph left;
  std::vector<bool> right_infinite;
  std::vector<bool> left_infinite;
};
ResolvedCompanions resolve_companions(const LabeledGraph& g);

CylinderClass cylinder_class(const LabeledGraph& g, const Word& w);
CylinderClass cylinder_class(const ResolvedCompanions& rc, const Word& w);

// Presentation of the derived shift: words whose cylinder is infinite.
LabeledGraph derive(const LabeledGraph& g);

// Exact language comparison via product with the subset automaton.
bool language_included(const LabeledGraph& g, const LabeledGraph& h);
bool language_equal(const LabeledGraph& g, const LabeledGraph& h);

struct DerivativeChain {
  std::vector<LabeledGraph> presentations;  // X, X', X'', ... up to the fixpoint
  std::size_t rank = 0;
  bool perfect_kernel_empty = false;
};
DerivativeChain rank_chain(const LabeledGraph& g);
bool is_countable(const LabeledGraph& g);

// Counts of words of length |w| + 2k in B(X) having w in the middle, for
// k = 0..k_max. Saturates at UINT64_MAX.
std::vector<std::uint64_t> cylinder_growth_oracle(const LabeledGraph& g, const Word& w, std::size_t k_max);

struct GrowthVerdict {
  bool infinite = false;
  std::vector<std::uint64_t> counts;
  std::size_t plateau = 0;  // run of equal values required for a finite verdict
};
// Classification from counts alone: finite iff the sequence holds still for
// |states|^2 + 1 consecutive values within the horizon.
GrowthVerdict growth_verdict(const LabeledGraph& g, const Word& w);

}  // namespace subshift
