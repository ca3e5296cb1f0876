#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace subshift {

struct CounterTransition {
  int state;
  std::vector<bool> zero;   // required zero flag per counter
  std::vector<int> delta;   // -1, 0 or +1 per counter
  int next;
};

struct CounterMachineSpec {
  std::vector<std::string> states;
  std::vector<std::string> counters;
  int initial = 0;
  std::vector<CounterTransition> transitions;

  int state_index(const std::string& s) const;
};

struct MachineConfig {
  int state;
  std::vector<long> values;
  auto operator<=>(const MachineConfig&) const = default;
};

// {"states", "counters", "initial", "transitions": [{"state", "zero": [bool],
// "delta": [int], "next"}]}. A transition fires when every counter's zero
// flag matches.
CounterMachineSpec machine_from_json(const nlohmann::json& j);
nlohmann::json machine_to_json(const CounterMachineSpec& m);

// Successors in ascending order; branches that would drive a counter below
// zero are dropped.
std::vector<MachineConfig> cm_step(const CounterMachineSpec& m, const MachineConfig& c);

// Runs `steps` steps from the initial configuration with all counters zero.
// Wherever a step has several successors the next entry of `choices` picks
// one by index. After every step `check` may reject the run. Throws
// SimulationError on a halt, a rejection, a missing choice or an index out
// of range. The result holds steps + 1 configurations.
std::vector<MachineConfig> simulate(const CounterMachineSpec& m, int steps, const std::vector<int>& choices,
                                    const std::function<bool(const MachineConfig&)>& check = {});

// Counters c and d. From c = 1, each round moves c into d twice over and
// back, so that c doubles every time the machine re-enters state A with
// d = 0: init -> A, A: c > 0 dec c inc d -> B, B: inc d -> A,
// A: c = 0 -> C, C: d > 0 dec d inc c -> C, C: d = 0 -> A.
CounterMachineSpec doubling_machine();

// A single state looping without counters.
CounterMachineSpec trivial_machine();

// Guess-then-check skeleton over counters n1..nk and t: state guess_i counts
// n_i up and may at any step move on to guess_{i+1}; after the last guess
// the state check increments t forever. Choice 0 keeps counting, choice 1
// moves on. The predicate on (n1..nk, t) is
// supplied as the `check` callback of simulate.
CounterMachineSpec guess_loop_machine(int k);

}  // namespace subshift
