#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "subshift/configuration.hpp"

namespace subshift {

class Poset {
 public:
  // Validates reflexivity, antisymmetry and transitivity. Reflexive pairs
  // may be omitted from `leq`; they are added.
  Poset(std::vector<std::string> elements, const std::set<std::pair<std::string, std::string>>& leq);

  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t index(const std::string& e) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
};

Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);

struct PosetStats {
  std::vector<int> r;                        // longest descending chain length minus one
  std::vector<std::vector<std::size_t>> p;   // immediate predecessors, ascending
  std::vector<std::uint64_t> k;              // 1 on minimal elements, 1 + sum over p otherwise
  std::vector<std::size_t> minimal;
};

PosetStats poset_stats(const Poset& p);

// phi(n, 1) = n, phi(n, r) = sum_{i <= n} phi(i, r - 1); phi(0, r) = 0.
std::uint64_t phi(int n, int r);

// Configuration f(x). A minimal element is the unary point of its own
// symbol. Otherwise, with r = r(x) and S_n = phi(n - 1, r + 1):
//   row 0, x >= 0 is the half-line;
//   columns [S_n, S_n + phi(n, r)) form step n;
//   below the line, step n holds an n-deep ruler rectangle, subdivided into
//   rank r - 1 rulers down to diagonal squares at rank 1;
//   above the line, step n stacks one data rectangle per immediate
//   predecessor y in element order, of height n k(y) + c(y), where c is 0
//   on minimal elements and 1 + sum of c over predecessors otherwise (one
//   extra row per nested line);
//   a data rectangle of a minimal y is filled with y's symbol; otherwise it
//   shows f(y) with f(y)'s line n rows above the rectangle's bottom and the
//   start of f(y)'s step n on the rectangle's right border.
// Every other cell carries a background symbol of x's region: left of the
// origin, below the rulers, or above the data.
ConfigurationWindow poset_config(const Poset& p, const std::string& x, Bounds b);

// All symbols used by poset_config for this poset, in a fixed order.
Alphabet poset_alphabet(const Poset& p);

// m[a][b]: every small-window pattern of f(b) taken from the square
// [-2 small, 2 small)^2 occurs in f(a) on [-big / 8, 7 big / 8) x
// [-big / 2, big / 2). Expected to equal b <= a.
std::vector<std::vector<bool>> verify_embedding(const Poset& p, int small, int big);

}  // namespace subshift
