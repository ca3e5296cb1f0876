#pragma once

#include <set>

#include "subshift/graph.hpp"

namespace subshift {

// Binary shift in which, reading a word left to right, the distance between
// consecutive 1s doubles: 1 0^{n-1} 1 0^{m-1} a and a 0^{n-1} 1 0^{m-1} 1
// are forbidden unless (a = 1) holds exactly when m = 2n. Words are over the
// alphabet {"0", "1"} with 0 and 1 as symbol indices.

// True if the word avoids both rules at every position.
bool powers_of_two_admissible(const Word& w);

// Gap scan: true if w occurs in a point whose 1s sit at t + g(2^j - 1),
// j >= 0, for an odd g, or in one of that family's limit points.
bool powers_of_two_factor(const Word& w);

// Every violating word 1 0^{n-1} 1 0^{m-1} a or a 0^{n-1} 1 0^{m-1} 1 of
// length at most max_len.
std::set<Word> powers_of_two_forbidden(int max_len);

// Presentation of the shift of finite type cut out by
// powers_of_two_forbidden(max_len). Its words shorter than max_len are
// exactly the factors accepted by powers_of_two_factor.
LabeledGraph powers_of_two_graph(int max_len);

}  // namespace subshift
