#pragma once

#include <vector>

#include "subshift/configuration.hpp"
#include "subshift/counter_machine.hpp"

namespace subshift {

// Computation cone over the input 1^l 2^k, scheme version 1.
//   Row 0 holds the input on columns [0, l + k), zeros elsewhere.
//   Above row 0 the input columns continue as |1 and |2.
//   The cone's left wall is column c0 = l + k, its right wall c0 + y on row
//   y >= 1, and its interior lies strictly between.
//   Update rows are 2^s, s >= 0. Rows [2^s, 2^(s+1)) show the machine
//   configuration after s steps: the wall cell names the state and the
//   interior cell at distance j from the wall lists, as a bit mask, the
//   counters with value >= j.
//   The ball runs along each update row from wall to wall and climbs two
//   columns per row in between, reaching the right wall on the next update
//   row.
// Symbols: 0, 1, 2, |1, |2, W:<state>, C<mask>, R, each cone symbol also
// with a trailing * where the ball is.
//
// The window spans columns [-1, c0 + height] and rows [0, height).
ConfigurationWindow cone_render(const CounterMachineSpec& m, int l, int k, int height, const std::vector<int>& choices);

// Rows needed to show `sweeps` machine steps: 2^sweeps + 1.
int cone_rows_for_sweeps(int sweeps);

struct ConeTrace {
  std::vector<int> update_rows;        // window rows
  std::vector<MachineConfig> configs;  // read off each update row
};

// Reads state and counters back from the update rows of a cone_render
// window.
ConeTrace cone_decode(const CounterMachineSpec& m, const ConfigurationWindow& cw);

}  // namespace subshift
