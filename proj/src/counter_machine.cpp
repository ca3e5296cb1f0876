#include "subshift/counter_machine.hpp"

#include <algorithm>

#include "subshift/errors.hpp"

namespace subshift {

int CounterMachineSpec::state_index(const std::string& s) const {
  auto it = std::find(states.begin(), states.end(), s);
  if (it == states.end()) throw InputError("unknown machine state '" + s + "'");
  return static_cast<int>(it - states.begin());
}

CounterMachineSpec machine_from_json(const nlohmann::json& j) {
  try {
    CounterMachineSpec m;
    m.states = j.at("states").get<std::vector<std::string>>();
    m.counters = j.at("counters").get<std::vector<std::string>>();
    if (m.states.empty()) throw InputError("machine has no states");
    m.initial = m.state_index(j.at("initial").get<std::string>());
    const std::size_t k = m.counters.size();
    for (const auto& t : j.at("transitions")) {
      CounterTransition tr;
      tr.state = m.state_index(t.at("state").get<std::string>());
      tr.next = m.state_index(t.at("next").get<std::string>());
      tr.zero = t.at("zero").get<std::vector<bool>>();
      tr.delta = t.at("delta").get<std::vector<int>>();
      if (tr.zero.size() != k || tr.delta.size() != k)
        throw InputError("transition needs one zero flag and one delta per counter");
      for (int d : tr.delta)
        if (d < -1 || d > 1) throw InputError("counter deltas are -1, 0 or 1");
      m.transitions.push_back(std::move(tr));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed machine JSON: ") + e.what());
  }
}

nlohmann::json machine_to_json(const CounterMachineSpec& m) {
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : m.transitions)
    ts.push_back({{"state", m.states[t.state]}, {"zero", t.zero}, {"delta", t.delta}, {"next", m.states[t.next]}});
  return {{"states", m.states}, {"counters", m.counters}, {"initial", m.states[m.initial]}, {"transitions", ts}};
}

std::vector<MachineConfig> cm_step(const CounterMachineSpec& m, const MachineConfig& c) {
  if (c.values.size() != m.counters.size()) throw InputError("one value per counter expected");
  for (long v : c.values)
    if (v < 0) throw InputError("counter values are nonnegative");
  std::vector<MachineConfig> out;
  for (const auto& t : m.transitions) {
    if (t.state != c.state) continue;
    bool fits = true;
    for (std::size_t i = 0; i < c.values.size() && fits; ++i) fits = t.zero[i] == (c.values[i] == 0);
    if (!fits) continue;
    MachineConfig nx{t.next, c.values};
    for (std::size_t i = 0; i < nx.values.size() && fits; ++i) {
      nx.values[i] += t.delta[i];
      fits = nx.values[i] >= 0;
    }
    if (fits) out.push_back(std::move(nx));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MachineConfig> simulate(const CounterMachineSpec& m, int steps, const std::vector<int>& choices,
                                    const std::function<bool(const MachineConfig&)>& check) {
  std::vector<MachineConfig> trace{{m.initial, std::vector<long>(m.counters.size(), 0)}};
  std::size_t used = 0;
  for (int s = 0; s < steps; ++s) {
    auto next = cm_step(m, trace.back());
    if (next.empty()) throw SimulationError("machine halts after " + std::to_string(s) + " steps");
    std::size_t pick = 0;
    if (next.size() > 1) {
      if (used >= choices.size())
        throw SimulationError("choices run out at step " + std::to_string(s + 1) + " with " +
                              std::to_string(next.size()) + " branches");
      const int c = choices[used++];
      if (c < 0 || static_cast<std::size_t>(c) >= next.size())
        throw SimulationError("choice " + std::to_string(c) + " at step " + std::to_string(s + 1) +
                              " is not one of the " + std::to_string(next.size()) + " branches");
      pick = static_cast<std::size_t>(c);
    }
    trace.push_back(next[pick]);
    if (check && !check(trace.back()))
      throw SimulationError("check rejects the configuration after step " + std::to_string(s + 1));
  }
  return trace;
}

CounterMachineSpec doubling_machine() {
  CounterMachineSpec m;
  m.states = {"init", "A", "B", "C"};
  m.counters = {"c", "d"};
  m.initial = 0;
  auto add = [&](int s, std::vector<bool> z, std::vector<int> d, int n) { m.transitions.push_back({s, z, d, n}); };
  for (bool zc : {false, true})
    for (bool zd : {false, true}) {
      add(0, {zc, zd}, {1, 0}, 1);
      if (!zc) add(1, {zc, zd}, {-1, 1}, 2);
      if (zc) add(1, {zc, zd}, {0, 0}, 3);
      add(2, {zc, zd}, {0, 1}, 1);
      if (!zd) add(3, {zc, zd}, {1, -1}, 3);
      if (zd) add(3, {zc, zd}, {0, 0}, 1);
    }
  return m;
}

CounterMachineSpec trivial_machine() {
  CounterMachineSpec m;
  m.states = {"loop"};
  m.transitions.push_back({0, {}, {}, 0});
  return m;
}

CounterMachineSpec guess_loop_machine(int k) {
  if (k < 0) throw InputError("number of guesses must be nonnegative");
  CounterMachineSpec m;
  for (int i = 1; i <= k; ++i) {
    m.states.push_back("guess" + std::to_string(i));
    m.counters.push_back("n" + std::to_string(i));
  }
  m.states.push_back("check");
  m.counters.push_back("t");
  const std::size_t nc = m.counters.size();
  const int check = k;
  // Every combination of zero flags gets the same moves.
  for (std::size_t mask = 0; mask < (std::size_t{1} << nc); ++mask) {
    std::vector<bool> zero(nc);
    for (std::size_t i = 0; i < nc; ++i) zero[i] = (mask >> i) & 1;
    for (int i = 0; i < k; ++i) {
      std::vector<int> inc(nc, 0);
      inc[static_cast<std::size_t>(i)] = 1;
      m.transitions.push_back({i, zero, inc, i});
      m.transitions.push_back({i, zero, std::vector<int>(nc, 0), i + 1});
    }
    std::vector<int> tick(nc, 0);
    tick.back() = 1;
    m.transitions.push_back({check, zero, tick, check});
  }
  return m;
}

}  // namespace subshift
