#include "subshift/poset.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "subshift/errors.hpp"

namespace subshift {

Poset::Poset(std::vector<std::string> elements, const std::set<std::pair<std::string, std::string>>& leq)
    : elements_(std::move(elements)), leq_(elements_.size(), std::vector<bool>(elements_.size(), false)) {
  if (elements_.empty()) throw InputError("poset has no elements");
  std::set<std::string> seen(elements_.begin(), elements_.end());
  if (seen.size() != elements_.size()) throw InputError("duplicate poset element");
  for (std::size_t i = 0; i < size(); ++i) leq_[i][i] = true;
  for (const auto& [a, b] : leq) leq_[index(a)][index(b)] = true;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        throw InputError("relation is not antisymmetric: " + elements_[a] + ", " + elements_[b]);
      for (std::size_t c = 0; c < size(); ++c)
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
          throw InputError("relation is not transitive: " + elements_[a] + " <= " + elements_[b] + " <= " +
                           elements_[c]);
    }
}

std::size_t Poset::index(const std::string& e) const {
  auto it = std::find(elements_.begin(), elements_.end(), e);
  if (it == elements_.end()) throw InputError("unknown poset element '" + e + "'");
  return static_cast<std::size_t>(it - elements_.begin());
}

Poset poset_from_json(const nlohmann::json& j) {
  try {
    auto elements = j.at("elements").get<std::vector<std::string>>();
    std::set<std::pair<std::string, std::string>> leq;
    for (const auto& pr : j.at("leq")) {
      if (!pr.is_array() || pr.size() != 2) throw InputError("leq entries are [a, b] pairs");
      leq.insert({pr[0].get<std::string>(), pr[1].get<std::string>()});
    }
    return Poset(std::move(elements), leq);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed poset JSON: ") + e.what());
  }
}

nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json leq = nlohmann::json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) leq.push_back({p.elements()[a], p.elements()[b]});
  return {{"elements", p.elements()}, {"leq", leq}};
}

PosetStats poset_stats(const Poset& p) {
  const std::size_t n = p.size();
  PosetStats st;
  st.r.assign(n, -1);
  st.p.resize(n);
  st.k.assign(n, 0);
  std::function<int(std::size_t)> depth = [&](std::size_t x) {
    if (st.r[x] >= 0) return st.r[x];
    int best = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (p.less(y, x)) best = std::max(best, depth(y) + 1);
    return st.r[x] = best;
  };
  for (std::size_t x = 0; x < n; ++x) {
    depth(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(y, x)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < n && covered; ++z)
        if (p.less(y, z) && p.less(z, x)) covered = false;
      if (covered) st.p[x].push_back(y);
    }
    if (st.r[x] == 0) st.minimal.push_back(x);
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return st.r[a] < st.r[b]; });
  for (std::size_t x : order) {
    st.k[x] = 1;
    if (st.r[x] > 0)
      for (std::size_t y : st.p[x]) st.k[x] += st.k[y];
  }
  return st;
}

std::uint64_t phi(int n, int r) {
  if (n < 0 || r < 1) throw InputError("phi needs n >= 0 and r >= 1");
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) row[i] = static_cast<std::uint64_t>(i);
  for (int level = 2; level <= r; ++level) {
    std::uint64_t acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (row[i] > std::numeric_limits<std::uint64_t>::max() - acc) throw InputError("phi overflows 64 bits");
      acc += row[i];
      row[i] = acc;
    }
  }
  return row[n];
}

namespace {

const char* const kRegions[] = {"left", "line", "above", "below", "ruler", "diag"};
enum Region { kLeft, kLine, kAbove, kBelow, kRuler, kDiag };

class Renderer {
 public:
  explicit Renderer(const Poset& p) : p_(p), st_(poset_stats(p)), c_(p.size(), 0) {
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return st_.r[a] < st_.r[b]; });
    for (std::size_t x : order)
      if (st_.r[x] > 0) {
        c_[x] = 1;
        for (std::size_t y : st_.p[x]) c_[x] += c_[y];
      }
    std::vector<std::string> names;
    for (std::size_t x = 0; x < p.size(); ++x) {
      first_symbol_.push_back(static_cast<Symbol>(names.size()));
      if (st_.r[x] == 0) {
        names.push_back(p.elements()[x]);
      } else {
        for (const char* reg : kRegions) names.push_back(p.elements()[x] + "." + reg);
      }
    }
    alphabet_ = Alphabet(names);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const PosetStats& stats() const { return st_; }

  std::int64_t phi_at(std::int64_t n, int r) {
    if (n <= 0) return 0;
    auto& t = table_[r];
    while (static_cast<std::int64_t>(t.size()) <= n) t.push_back(0);
    auto& v = t[static_cast<std::size_t>(n)];
    if (v == 0) v = r == 1 ? n : phi_at(n - 1, r) + phi_at(n, r - 1);
    return v;
  }

  // Height of the step-n column of f(x) above the line.
  std::int64_t stack_height(std::size_t x, std::int64_t n) const {
    std::int64_t h = 0;
    for (std::size_t y : st_.p[x]) h += n * static_cast<std::int64_t>(st_.k[y]) + c_[y];
    return h;
  }

  Symbol at(std::size_t x, std::int64_t X, std::int64_t Y) {
    const Symbol base = first_symbol_[x];
    const int r = st_.r[x];
    if (r == 0) return base;
    if (X < 0) return base + kLeft;
    if (Y == 0) return base + kLine;
    std::int64_t n = 1;
    while (phi_at(n, r + 1) <= X) ++n;
    const std::int64_t start = phi_at(n - 1, r + 1), width = phi_at(n, r);
    if (Y < 0) return -Y <= n ? ruler(base, r, n, X - start, -Y) : base + kBelow;
    std::int64_t bottom = 1;
    for (std::size_t y : st_.p[x]) {
      const std::int64_t h = n * static_cast<std::int64_t>(st_.k[y]) + c_[y];
      if (Y < bottom + h) {
        if (st_.r[y] == 0) return first_symbol_[y];
        return at(y, X - (start + width) + phi_at(n - 1, st_.r[y] + 1), Y - bottom - n);
      }
      bottom += h;
    }
    return base + kAbove;
  }

 private:
  // Column i of a rank-r ruler of depth n, at depth d from the line.
  Symbol ruler(Symbol base, int r, std::int64_t n, std::int64_t i, std::int64_t d) {
    while (r > 1) {
      std::int64_t j = 1;
      while (phi_at(j, r) <= i) ++j;
      if (d > j) return base + kRuler;
      i -= phi_at(j - 1, r);
      n = j;
      --r;
    }
    return i == n - d ? base + kDiag : base + kRuler;
  }

  const Poset& p_;
  PosetStats st_;
  std::vector<std::int64_t> c_;
  std::vector<Symbol> first_symbol_;
  Alphabet alphabet_;
  std::map<int, std::vector<std::int64_t>> table_;
};

ConfigurationWindow render(Renderer& rd, const Poset& p, std::size_t x, Bounds b) {
  ConfigurationWindow cw;
  cw.generator = "poset";
  cw.parameters = {{"poset", poset_to_json(p)}, {"element", p.elements()[x]}};
  cw.alphabet = rd.alphabet();
  cw.window = Pattern2D(b.w, b.h, kHole, b.x0, b.y0);
  for (int yy = 0; yy < b.h; ++yy)
    for (int xx = 0; xx < b.w; ++xx) cw.window.at(xx, yy) = rd.at(x, b.x0 + xx, b.y0 + yy);
  return cw;
}

}  // namespace

Alphabet poset_alphabet(const Poset& p) { return Renderer(p).alphabet(); }

ConfigurationWindow poset_config(const Poset& p, const std::string& x, Bounds b) {
  const std::size_t xi = p.index(x);
  Renderer rd(p);
  if (b.w < 1 || b.h < 1) throw InputError("window must be at least 1x1");
  if (rd.stats().r[xi] > 0) {
    const std::int64_t need = 2 + rd.stack_height(xi, 1);
    if (b.h < need)
      throw InputError("window too small for the first rectangle of '" + x + "': need height " +
                       std::to_string(need));
  }
  return render(rd, p, xi, b);
}

std::vector<std::vector<bool>> verify_embedding(const Poset& p, int small, int big) {
  if (small < 1 || big < 4 * small) throw InputError("need 1 <= small and 4 small <= big");
  Renderer rd(p);
  const std::size_t n = p.size();
  std::vector<PatternSet> probe, whole;
  for (std::size_t x = 0; x < n; ++x) {
    probe.push_back(PatternSet::blocks_of(render(rd, p, x, {-2 * small, -2 * small, 4 * small, 4 * small}).window,
                                          small, small));
    whole.push_back(PatternSet::blocks_of(render(rd, p, x, {-big / 8, -big / 2, big, big}).window, small, small));
  }
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a][b] = subpattern_leq(probe[b], whole[a]);
  return m;
}

}  // namespace subshift
