#include "subshift/cone.hpp"

#include "subshift/errors.hpp"

namespace subshift {

namespace {

Alphabet cone_alphabet(const CounterMachineSpec& m) {
  std::vector<std::string> names = {"0", "1", "2", "|1", "|2"};
  for (const auto& s : m.states) {
    names.push_back("W:" + s);
    names.push_back("W:" + s + "*");
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << m.counters.size()); ++mask) {
    names.push_back("C" + std::to_string(mask));
    names.push_back("C" + std::to_string(mask) + "*");
  }
  names.push_back("R");
  names.push_back("R*");
  return Alphabet(names);
}

int floor_log2(int y) {
  int s = 0;
  while ((2 << s) <= y) ++s;
  return s;
}

}  // namespace

int cone_rows_for_sweeps(int sweeps) {
  if (sweeps < 0 || sweeps > 24) throw InputError("sweeps must lie in [0, 24]");
  return (1 << sweeps) + 1;
}

ConfigurationWindow cone_render(const CounterMachineSpec& m, int l, int k, int height, const std::vector<int>& choices) {
  if (l < 0 || k < 0) throw InputError("input lengths must be nonnegative");
  if (height < 2) throw InputError("cone needs at least 2 rows");
  if (m.counters.size() > 16) throw InputError("at most 16 counters can be rendered");
  const int c0 = l + k;
  const int steps = floor_log2(height - 1);
  const auto trace = simulate(m, steps, choices);

  ConfigurationWindow cw;
  cw.generator = "cone";
  cw.parameters = {{"l", l}, {"k", k}, {"height", height}, {"choices", choices}, {"machine", machine_to_json(m)}};
  cw.alphabet = cone_alphabet(m);
  const int x0 = -1;
  cw.window = Pattern2D(c0 + height + 2, height, cw.alphabet.index("0"), x0, 0);
  auto put = [&](int x, int y, const std::string& s) { cw.window.at(x - x0, y) = cw.alphabet.index(s); };

  for (int x = 0; x < c0; ++x) put(x, 0, x < l ? "1" : "2");
  for (int y = 1; y < height; ++y) {
    for (int x = 0; x < c0; ++x) put(x, y, x < l ? "|1" : "|2");
    const int s = floor_log2(y), update = 1 << s;
    const auto& cfg = trace[static_cast<std::size_t>(s)];
    auto ball = [&](int x) { return y == update ? true : x == c0 + 2 * (y - update); };
    const std::string star = "*";
    put(c0, y, "W:" + m.states[cfg.state] + (ball(c0) ? star : ""));
    for (int j = 1; j < y; ++j) {
      std::size_t mask = 0;
      for (std::size_t i = 0; i < cfg.values.size(); ++i)
        if (cfg.values[i] >= j) mask |= std::size_t{1} << i;
      put(c0 + j, y, "C" + std::to_string(mask) + (ball(c0 + j) ? star : ""));
    }
    put(c0 + y, y, std::string("R") + (ball(c0 + y) ? star : ""));
  }
  return cw;
}

ConeTrace cone_decode(const CounterMachineSpec& m, const ConfigurationWindow& cw) {
  if (cw.generator != "cone") throw InputError("not a cone window");
  const int c0 = cw.parameters.at("l").get<int>() + cw.parameters.at("k").get<int>();
  const int x0 = cw.window.x0;
  ConeTrace out;
  for (int y = 1; y < cw.window.height; y *= 2) {
    std::string wall = cw.alphabet.name(cw.window.at(c0 - x0, y));
    if (wall.rfind("W:", 0) != 0) throw InputError("no wall cell on update row " + std::to_string(y));
    wall = wall.substr(2);
    if (!wall.empty() && wall.back() == '*') wall.pop_back();
    MachineConfig cfg{m.state_index(wall), std::vector<long>(m.counters.size(), 0)};
    for (int j = 1; j < y; ++j) {
      std::string cell = cw.alphabet.name(cw.window.at(c0 + j - x0, y));
      if (cell.back() == '*') cell.pop_back();
      const auto mask = std::stoul(cell.substr(1));
      for (std::size_t i = 0; i < cfg.values.size(); ++i)
        if ((mask >> i) & 1) cfg.values[i] = j;
    }
    out.update_rows.push_back(y);
    out.configs.push_back(std::move(cfg));
  }
  return out;
}

}  // namespace subshift
