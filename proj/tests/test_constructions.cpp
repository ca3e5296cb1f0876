#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "subshift/chain.hpp"
#include "subshift/cone.hpp"
#include "subshift/diamond.hpp"
#include "subshift/errors.hpp"
#include "subshift/grid.hpp"
#include "subshift/poset.hpp"
#include "subshift/powers_of_two.hpp"
#include "subshift/search.hpp"
#include "subshift/sft2d.hpp"
#include "subshift/sofic1d.hpp"

using namespace subshift;

namespace {

bool naive_admissible(const TileSet2D& ts, const Pattern2D& p) {
  for (const auto& f : ts.forbidden())
    for (int y = 0; y + f.height <= p.height; ++y)
      for (int x = 0; x + f.width <= p.width; ++x) {
        bool hit = true;
        for (int j = 0; j < f.height && hit; ++j)
          for (int i = 0; i < f.width && hit; ++i) hit = f.at(i, j) == p.at(x + i, y + j);
        if (hit) return false;
      }
  return true;
}

// Completions of the holes of `p`, by trying every assignment.
std::uint64_t brute_completions(const TileSet2D& ts, Pattern2D p) {
  std::vector<std::size_t> holes;
  for (std::size_t i = 0; i < p.cells.size(); ++i)
    if (p.cells[i] == kHole) holes.push_back(i);
  const auto k = static_cast<Symbol>(ts.alphabet().size());
  for (auto h : holes) p.cells[h] = 0;
  std::uint64_t count = 0;
  while (true) {
    if (naive_admissible(ts, p)) ++count;
    std::size_t i = 0;
    while (i < holes.size() && ++p.cells[holes[i]] == k) p.cells[holes[i++]] = 0;
    if (i == holes.size()) break;
  }
  return count;
}

std::string name_at(const ConfigurationWindow& cw, int x, int y) {
  return cw.alphabet.name(cw.window.at(x - cw.window.x0, y - cw.window.y0));
}

Word bits(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

std::vector<Word> binary_words(std::size_t len) {
  std::vector<Word> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
    Word w(len);
    for (std::size_t i = 0; i < len; ++i) w[i] = static_cast<Symbol>((mask >> i) & 1);
    out.push_back(w);
  }
  return out;
}

Poset two_chain() { return Poset({"a", "b"}, {{"a", "b"}}); }
Poset antichain() { return Poset({"a", "b"}, {}); }
Poset diamond_poset() {
  return Poset({"bot", "m1", "m2", "top"},
               {{"bot", "m1"}, {"bot", "m2"}, {"m1", "top"}, {"m2", "top"}, {"bot", "top"}});
}

}  // namespace

TEST_CASE("grid shift windows") {
  auto ts = grid_shift();
  for (int side = 1; side <= 6; ++side)
    CHECK(locally_admissible(ts, grid_window(side, {-4, -3, 15, 15}).window));
  auto cw = grid_window(2, {0, 0, 6, 6});
  CHECK(locally_admissible(ts, cw.window));
  CHECK(name_at(cw, 1, 1) == "d");
  cw.window.at(1, 1) = ts.alphabet().index("b");
  CHECK_FALSE(locally_admissible(ts, cw.window));
  for (Symbol s = 0; s < static_cast<Symbol>(ts.alphabet().size()); ++s) {
    Pattern2D one(1, 1, s);
    CHECK(locally_admissible(ts, one));
  }
}

TEST_CASE("grid rectangles are squares") {
  auto ts = grid_shift();
  // Interior cells tried exhaustively.
  for (int rw = 1; rw <= 2; ++rw)
    for (int rh = 1; rh <= 2; ++rh) {
      auto pins = grid_rectangle_pins(ts, rw + 2, rh + 2, 0, 0, rw, rh);
      const auto brute = brute_completions(ts, pins);
      CHECK((brute > 0) == (rw == rh));
      CHECK(Solver(ts, pins).count() == brute);
    }
  for (int rw = 1; rw <= 8; ++rw)
    for (int rh = 1; rh <= 8; ++rh) {
      auto pins = grid_rectangle_pins(ts, 12, 12, 1, 1, rw, rh);
      CHECK(Solver(ts, pins).first().has_value() == (rw == rh));
    }
  CHECK_FALSE(extensible(ts, grid_rectangle_pins(ts, 4, 5, 0, 0, 2, 3), 4));
  CHECK(extensible(ts, grid_rectangle_pins(ts, 4, 4, 0, 0, 2, 2), 2));
  CHECK_THROWS_AS(grid_rectangle_pins(ts, 4, 4, 0, 0, 3, 3), InputError);
}

TEST_CASE("diamond configurations are admissible") {
  auto ts = diamond_shift();
  CHECK(ts.metadata().contains("symbol_counts"));
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto cw = diamond_config(n, m, {-10, -8, 21, 17});
      CHECK(locally_admissible(ts, cw.window));
      CHECK(locally_admissible(ts, diamond_core(n, m).window));
    }
  CHECK_THROWS_AS(diamond_config(2, 2, {-2, -2, 4, 4}), InputError);
  CHECK_THROWS_AS(diamond_config(0, 1, {-8, -8, 16, 16}), InputError);
}

TEST_CASE("diamond configuration contents") {
  auto count = [](const ConfigurationWindow& cw, char kind, int pos, char letter) {
    int c = 0;
    for (auto s : cw.window.cells) {
      auto n = cw.alphabet.name(s);
      if (n[0] == kind && n[static_cast<std::size_t>(pos)] == letter) ++c;
    }
    return c;
  };
  auto one = diamond_config(1, 1, {-8, -8, 16, 16});
  CHECK(count(one, 'U', 1, 't') == 1);  // red apex
  CHECK(count(one, 'D', 2, 't') == 1);  // blue apex
  CHECK(count(one, 'L', 1, 'l') == 1);
  CHECK(count(one, 'L', 2, 'l') == 1);
  CHECK(name_at(one, 0, 1) == "Uttu");  // both apexes; diamonds span the line
  CHECK(name_at(one, 0, 2) == "Uoox");
  CHECK(name_at(one, 0, -1) == "Dttu");

  auto wide = diamond_config(2, 1, {-12, -12, 24, 24});
  CHECK(locally_admissible(diamond_shift(), wide.window));
  CHECK(name_at(wide, 0, 1) == "Utmu");   // red apex of size 1 under the blue one
  CHECK(name_at(wide, 0, -2) == "Dotu");  // blue apex of size 2
  CHECK(name_at(wide, 5, 1) == "Uoos");   // red signal leaving at height 1
  CHECK(name_at(wide, -5, 2) == "Uoos");  // and arriving at height 2

  auto above = diamond_config(2, 2, {-12, 6, 24, 8});
  for (auto s : above.window.cells) CHECK(above.alphabet.name(s) == "Uoov");
  CHECK(locally_admissible(diamond_shift(), above.window));
}

TEST_CASE("diamond rules reject broken geometry") {
  auto ts = diamond_shift();
  const auto& a = ts.alphabet();
  // The line replaced by upper background: the diamond's corners float.
  auto cw = diamond_config(2, 2, {-6, 0, 13, 7});
  for (int x = 0; x < cw.window.width; ++x) cw.window.at(x, 0) = a.index("Uoou");
  CHECK_FALSE(locally_admissible(ts, cw.window));
  // A red apex that absorbs no signal.
  auto lost = diamond_config(1, 1, {-6, -4, 13, 9});
  lost.window.at(6, 6) = a.index("Uoov");
  CHECK_FALSE(locally_admissible(ts, lost.window));
  // Sea of background around the line.
  Pattern2D sea(6, 3);
  for (int x = 0; x < 6; ++x) {
    sea.at(x, 0) = a.index("Doou");
    sea.at(x, 1) = a.index("Loon");
    sea.at(x, 2) = a.index("Uoou");
  }
  CHECK(locally_admissible(ts, sea));
  // Red diamond with no blue partner.
  Pattern2D lonely(5, 1);
  lonely.at(0, 0) = a.index("Loon");
  lonely.at(4, 0) = a.index("Loon");
  lonely.at(1, 0) = a.index("LloA");
  lonely.at(2, 0) = a.index("LmoA");
  CHECK_FALSE(a.contains("Lroa"));
  for (Symbol s = 0; s < static_cast<Symbol>(a.size()); ++s) {
    auto n = a.name(s);
    if (n[0] != 'L' || n[1] != 'r' || n[2] != 'o') continue;
    lonely.at(3, 0) = s;
    CHECK_FALSE(locally_admissible(ts, lonely));
  }
}

TEST_CASE("diamond type (1,1) is isolated at finite scale, (2,2) is not") {
  auto ts = diamond_shift();
  auto core11 = diamond_core(1, 1).window;
  CHECK_FALSE(approx_derivative_member(ts, core11, 7, 12));
  CHECK(approx_derivative_member(ts, diamond_core(2, 2).window, 9, 10));
  CHECK(approx_derivative_member(ts, diamond_core(1, 2).window, 9, 10));

  // Every completion of the (1,1) core at margin 8, grouped by the 7x7
  // square around it: no square is shared by two completions.
  const int m = 8, n = 7;
  Pattern2D pins(core11.width + 2 * m, core11.height + 2 * m);
  for (int y = 0; y < core11.height; ++y)
    for (int x = 0; x < core11.width; ++x) pins.at(x + m, y + m) = core11.at(x, y);
  const int sx = agree_square_origin(core11.width, core11.height, n, m).first;
  const int sy = agree_square_origin(core11.width, core11.height, n, m).second;
  std::map<std::vector<Symbol>, int> by_square;
  Solver(ts, pins).enumerate([&](const Pattern2D& q) {
    std::vector<Symbol> sq;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) sq.push_back(q.at(sx + x, sy + y));
    ++by_square[sq];
    return true;
  });
  REQUIRE_FALSE(by_square.empty());
  for (const auto& [sq, c] : by_square) CHECK(c == 1);
}

TEST_CASE("island points") {
  CHECK(island_point_valid(""));
  CHECK(island_point_valid("000"));
  CHECK(island_point_valid("a0b"));
  CHECK(island_point_valid("0aa000ab0bb0"));
  CHECK(island_point_valid("aaa0aab00abb0bbb"));
  CHECK_FALSE(island_point_valid("a"));
  CHECK_FALSE(island_point_valid("aa0bb"));
  CHECK_FALSE(island_point_valid("aa0ab0ab"));
  CHECK_THROWS_AS(island_point_valid("ac"), InputError);
}

TEST_CASE("powers of two rule") {
  CHECK(powers_of_two_admissible(bits("101")));
  CHECK(powers_of_two_admissible(bits("1010001")));
  CHECK_FALSE(powers_of_two_admissible(bits("10101")));
  CHECK(powers_of_two_admissible(bits("01101000100000001")));
  CHECK_FALSE(powers_of_two_admissible(bits("0101")));
  for (std::size_t len = 0; len <= 13; ++len)
    for (const auto& w : binary_words(len)) CHECK(powers_of_two_admissible(w) == powers_of_two_factor(w));
  for (const auto& f : powers_of_two_forbidden(9)) CHECK_FALSE(powers_of_two_admissible(f));
}

TEST_CASE("truncated powers-of-two presentation") {
  const int max_len = 9;
  auto g = powers_of_two_graph(max_len);
  CHECK(is_trim(g));
  for (std::size_t len = 1; len < static_cast<std::size_t>(max_len); ++len)
    for (const auto& w : binary_words(len)) CHECK(accepts(g, w) == powers_of_two_factor(w));
}

TEST_CASE("chain points") {
  auto x1 = chain_point(1, {0, 0, 17, 1});
  std::vector<int> ones;
  for (int x = 0; x < 17; ++x)
    if (x1.window.at(x, 0) == 1) ones.push_back(x);
  CHECK(ones == std::vector<int>{1, 2, 4, 8, 16});
  auto x2 = chain_point(2, {-20, 0, 60, 1});
  for (int x = -20; x < 40; ++x) CHECK(x2.window.at(x + 20, 0) == (x == 0 ? 1 : 0));
  for (int i = 1; i <= 3; ++i) {
    auto below = chain_point(i, {-10, -30, 40, 30});
    CHECK(std::all_of(below.window.cells.begin(), below.window.cells.end(), [](Symbol s) { return s == 0; }));
  }
  // Line 1 of x_1 straight from the rule: between 2^a and 2^(a+1) the
  // markers 2^a + 2^n with 3 * 2^n < 2^a.
  std::vector<int> line1;
  for (int a = 0; (1 << a) < 300; ++a)
    for (int n = 0; 3 * (1 << n) < (1 << a); ++n) line1.push_back((1 << a) + (1 << n));
  auto row = chain_point(1, {0, 2, 300, 1});
  std::vector<int> got;
  for (int x = 0; x < 300; ++x)
    if (row.window.at(x, 0) == 1) got.push_back(x);
  std::erase_if(line1, [](int x) { return x >= 300; });
  std::sort(line1.begin(), line1.end());
  CHECK(got == line1);
  // x_2's line 1 carries every power of two after the origin.
  auto row2 = chain_point(2, {0, 2, 70, 1});
  for (int x = 0; x < 70; ++x) CHECK(row2.window.at(x, 0) == ((x & (x - 1)) == 0 && x > 0 ? 1 : 0));
}

TEST_CASE("chain evidence") {
  auto e12 = verify_chain(1, 2, 8, 256);
  CHECK(e12.leq);
  CHECK_FALSE(e12.geq);
  auto e23 = verify_chain(2, 3, 8, 512);
  CHECK(e23.leq);
  CHECK_FALSE(e23.geq);
  for (int i = 1; i <= 3; ++i) {
    auto e = verify_chain(i, i, 8, 256);
    CHECK(e.leq);
    CHECK(e.geq);
  }
}

TEST_CASE("poset statistics") {
  auto c = poset_stats(two_chain());
  CHECK(c.r == std::vector<int>{0, 1});
  CHECK(c.k == std::vector<std::uint64_t>{1, 2});
  CHECK(c.minimal == std::vector<std::size_t>{0});
  auto d = poset_stats(diamond_poset());
  CHECK(d.k[1] == 2);
  CHECK(d.k[3] == 5);
  CHECK(d.r[3] == 2);
  CHECK(d.p[3] == std::vector<std::size_t>{1, 2});
  auto a = poset_stats(antichain());
  CHECK(a.minimal == std::vector<std::size_t>{0, 1});
  CHECK(a.k == std::vector<std::uint64_t>{1, 1});
  CHECK(a.r == std::vector<int>{0, 0});
  CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  CHECK_THROWS_AS(Poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), InputError);
  CHECK_THROWS_AS(Poset({"a"}, {{"a", "z"}}), InputError);
}

TEST_CASE("poset statistics on random posets") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    // Random order compatible with the index order, closed transitively.
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) lt[i][j] = rng() % 3 == 0;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (lt[i][k] && lt[k][j]) lt[i][j] = true;
    std::vector<std::string> names;
    std::set<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lt[i][j]) rel.insert({names[i], names[j]});
    auto st = poset_stats(Poset(names, rel));
    // Longest descending chain by enumerating every chain.
    std::function<int(int)> longest = [&](int x) {
      int best = 1;
      for (int y = 0; y < n; ++y)
        if (lt[y][x]) best = std::max(best, 1 + longest(y));
      return best;
    };
    for (int x = 0; x < n; ++x) {
      CHECK(st.r[x] == longest(x) - 1);
      std::vector<std::size_t> preds;
      for (int y = 0; y < n; ++y) {
        if (!lt[y][x]) continue;
        bool between = false;
        for (int z = 0; z < n; ++z) between = between || (lt[y][z] && lt[z][x]);
        if (!between) preds.push_back(static_cast<std::size_t>(y));
      }
      CHECK(st.p[x] == preds);
      std::uint64_t k = 1;
      if (st.r[x] > 0)
        for (auto y : preds) k += st.k[y];
      CHECK(st.k[x] == k);
      CHECK((st.r[x] == 0) == (std::find(st.minimal.begin(), st.minimal.end(), x) != st.minimal.end()));
    }
  }
}

TEST_CASE("phi") {
  CHECK(phi(5, 1) == 5);
  CHECK(phi(3, 2) == 6);
  CHECK(phi(3, 3) == 10);
  auto binom = [](std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int n = 2; n <= 50; ++n) {
    CHECK(phi(n, 2) == static_cast<std::uint64_t>(n * (n + 1) / 2));
    for (int r = 2; r <= 6; ++r) {
      CHECK(phi(n, r) - phi(n - 1, r) == phi(n, r - 1));
      CHECK(phi(n, r) == binom(static_cast<std::uint64_t>(n + r - 1), static_cast<std::uint64_t>(r)));
    }
  }
}

TEST_CASE("poset configurations") {
  auto c = two_chain();
  auto unary = poset_config(c, "a", {-3, -3, 7, 7});
  CHECK(std::all_of(unary.window.cells.begin(), unary.window.cells.end(),
                    [&](Symbol s) { return unary.alphabet.name(s) == "a"; }));
  auto top = poset_config(c, "b", {-1, -5, 12, 10});
  // Rulers below the line: step n covers [S_n, S_n + n) to depth n.
  int start = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int x = start; x < start + n; ++x) {
      for (int d = 1; d <= n; ++d) {
        auto s = name_at(top, x, -d);
        CHECK((s == "b.ruler" || s == "b.diag"));
        CHECK((s == "b.diag") == (x - start == n - d));
        CHECK(name_at(top, x, d) == "a");
      }
      CHECK(name_at(top, x, -n - 1) == "b.below");
      CHECK(name_at(top, x, n + 1) == "b.above");
      CHECK(name_at(top, x, 0) == "b.line");
    }
    start += n;
  }
  CHECK(name_at(top, -1, 0) == "b.left");

  auto d = diamond_poset();
  auto dt = poset_config(d, "top", {-1, -3, 40, 40});
  // Step n of top spans [phi(n-1, 3), phi(n, 3)); m1 and m2 each get height
  // n k + c = 2n + 1.
  for (int n = 1; n <= 4; ++n) {
    const int x = static_cast<int>(phi(n - 1, 3));
    const int h = 2 * n + 1;
    CHECK(name_at(dt, x, 1).rfind("m1.", 0) == 0);
    CHECK(name_at(dt, x, h).rfind("m1.", 0) == 0);
    CHECK(name_at(dt, x, h + 1).rfind("m2.", 0) == 0);
    CHECK(name_at(dt, x, 2 * h).rfind("m2.", 0) == 0);
    CHECK(name_at(dt, x, 2 * h + 1) == "top.above");
    // Inside m1's rectangle its own line sits n rows up.
    if (n >= 2) CHECK(name_at(dt, static_cast<int>(phi(n, 3)) - 1, 1 + n) == "m1.line");
  }
  CHECK_THROWS_AS(poset_config(d, "top", {0, 0, 10, 3}), InputError);
  CHECK_THROWS_AS(poset_config(d, "nope", {0, 0, 10, 10}), InputError);
}

TEST_CASE("poset embedding") {
  for (const auto& p : {two_chain(), antichain(), diamond_poset()}) {
    auto m = verify_embedding(p, 4, 512);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        CHECK(m[a][b] == p.leq(b, a));
        for (std::size_t c = 0; c < p.size(); ++c)
          if (m[a][b] && m[b][c]) CHECK(m[a][c]);
      }
  }
}

TEST_CASE("counter machine steps") {
  CounterMachineSpec inc;
  inc.states = {"s"};
  inc.counters = {"c"};
  inc.transitions = {{0, {true}, {1}, 0}};
  CHECK(cm_step(inc, {0, {0}}) == std::vector<MachineConfig>{{0, {1}}});
  CHECK(cm_step(inc, {0, {1}}).empty());
  CounterMachineSpec bad = inc;
  bad.transitions = {{0, {true}, {-1}, 0}};
  CHECK(cm_step(bad, {0, {0}}).empty());
  CounterMachineSpec two = inc;
  two.transitions = {{0, {true}, {1}, 0}, {0, {true}, {0}, 0}};
  CHECK(cm_step(two, {0, {0}}).size() == 2);
  CHECK_THROWS_AS(cm_step(inc, {0, {-1}}), InputError);

  auto dm = doubling_machine();
  auto back = machine_from_json(machine_to_json(dm));
  CHECK(machine_to_json(back) == machine_to_json(dm));
  auto trace = simulate(dm, 17, {});
  std::vector<long> at_a;
  for (const auto& c : trace)
    if (c.state == 1 && c.values[1] == 0) at_a.push_back(c.values[0]);
  CHECK(at_a == std::vector<long>{1, 2, 4});

  auto g = guess_loop_machine(1);
  CHECK_THROWS_AS(simulate(g, 3, {}), SimulationError);
  auto gt = simulate(g, 5, {0, 0, 1});
  CHECK(gt.back().values == std::vector<long>{2, 2});
  CHECK_THROWS_AS(simulate(g, 5, {0, 0, 1}, [](const MachineConfig& c) { return c.values[1] < 2; }),
                  SimulationError);
  CHECK_THROWS_AS(simulate(g, 2, {0, 7}), SimulationError);
  CHECK_THROWS_AS(simulate(inc, 2, {}), SimulationError);
  CHECK_THROWS_AS(machine_from_json(nlohmann::json{{"states", {"s"}}}), InputError);
}

TEST_CASE("cone rendering") {
  auto tm = trivial_machine();
  auto cw = cone_render(tm, 1, 1, 8, {});
  CHECK(name_at(cw, 0, 0) == "1");
  CHECK(name_at(cw, 1, 0) == "2");
  CHECK(name_at(cw, 0, 5) == "|1");
  for (auto s : cw.window.cells) {
    auto n = cw.alphabet.name(s);
    if (n[0] == 'C') CHECK(n.substr(0, 2) == "C0");
  }
  // The ball: full update rows, two columns per row in between.
  CHECK(name_at(cw, 2, 4) == "W:loop*");
  CHECK(name_at(cw, 6, 4) == "R*");
  CHECK(name_at(cw, 4, 5) == "C0*");
  CHECK(name_at(cw, 2, 5) == "W:loop");

  auto dm = doubling_machine();
  const int rows = cone_rows_for_sweeps(8);
  auto a = cone_render(dm, 2, 1, rows, {});
  CHECK(config_to_text(a) == config_to_text(cone_render(dm, 2, 1, rows, {})));
  auto tr = cone_decode(dm, a);
  CHECK(tr.update_rows == std::vector<int>{1, 2, 4, 8, 16, 32, 64, 128, 256});
  CHECK(tr.configs == simulate(dm, 8, {}));

  auto g = guess_loop_machine(2);
  CHECK_THROWS_AS(cone_render(g, 1, 2, 9, {0}), SimulationError);
  auto gc = cone_render(g, 1, 2, 9, {0, 1, 0});
  CHECK(cone_decode(g, gc).configs == simulate(g, 3, {0, 1, 0}));
}
