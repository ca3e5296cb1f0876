#include "subshift/powers_of_two.hpp"

#include "subshift/errors.hpp"
#include "subshift/sofic1d.hpp"

namespace subshift {

namespace {

std::vector<int> ones(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0 && w[i] != 1) throw InputError("powers-of-two words are binary");
    if (w[i] == 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

bool powers_of_two_admissible(const Word& w) {
  const auto pos = ones(w);
  const int len = static_cast<int>(w.size());
  for (std::size_t k = 0; k + 1 < pos.size(); ++k) {
    const int p = pos[k], q = pos[k + 1], gap = q - p;
    // Forward: the cell 2*gap after q must be the next 1.
    const int next = k + 2 < pos.size() ? pos[k + 2] : len;
    if (next < len ? next != q + 2 * gap : q + 2 * gap < len) return false;
    // Backward: the cell gap/2 before p must be the previous 1.
    const int prev = k > 0 ? pos[k - 1] : -1;
    if (prev >= 0) {
      if (gap != 2 * (p - prev)) return false;
    } else if (gap % 2 == 0 && p - gap / 2 >= 0) {
      return false;
    }
  }
  return true;
}

bool powers_of_two_factor(const Word& w) {
  const auto pos = ones(w);
  if (pos.size() < 2) return true;
  const int len = static_cast<int>(w.size());
  for (std::size_t k = 1; k + 1 < pos.size(); ++k)
    if (pos[k + 1] - pos[k] != 2 * (pos[k] - pos[k - 1])) return false;
  const int first_gap = pos[1] - pos[0];
  const int last_gap = pos.back() - pos[pos.size() - 2];
  if (pos.back() + 2 * last_gap < len) return false;
  // An even first gap means an earlier 1 at half that distance.
  if (first_gap % 2 == 0 && pos[0] - first_gap / 2 >= 0) return false;
  return true;
}

std::set<Word> powers_of_two_forbidden(int max_len) {
  if (max_len < 1) throw InputError("truncation length must be positive");
  std::set<Word> out;
  for (int n = 1; n + 2 <= max_len; ++n)
    for (int m = 1; n + m + 1 <= max_len; ++m)
      for (int a = 0; a <= 1; ++a) {
        if ((a == 1) == (m == 2 * n)) continue;
        Word fwd(static_cast<std::size_t>(n + m + 1), 0);
        fwd[0] = 1;
        fwd[n] = 1;
        fwd[n + m] = a;
        out.insert(fwd);
        Word bwd(static_cast<std::size_t>(n + m + 1), 0);
        bwd[0] = a;
        bwd[n] = 1;
        bwd[n + m] = 1;
        out.insert(bwd);
      }
  return out;
}

LabeledGraph powers_of_two_graph(int max_len) {
  return from_forbidden_words(Alphabet({"0", "1"}), powers_of_two_forbidden(max_len));
}

}  // namespace subshift
