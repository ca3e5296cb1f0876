#include <doctest.h>

#include "fixtures.hpp"
#include "subshift/derivative1d.hpp"
#include "subshift/errors.hpp"

using namespace subshift;
using namespace fixtures;

namespace {

// Brute-force count of words of length |w|+2k in B(X) with w in the middle,
// by explicit path search on every candidate word.
std::vector<std::uint64_t> brute_growth(const LabeledGraph& g, const Word& w, std::size_t k_max) {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::uint64_t c = 0;
    for (const auto& u : all_words(2, k)) {
      if (u.size() != k) continue;
      for (const auto& v : all_words(2, k))
        if (v.size() == k && path_exists(g, concat(concat(u, w), v))) ++c;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("ray cardinality") {
  auto g = sunny_side_up();
  CHECK(ray_cardinality(g, g.state_index("L"), Side::Right) == RayCardinality::Infinite);
  CHECK(ray_cardinality(g, g.state_index("R"), Side::Right) == RayCardinality::FinitePositive);
  CHECK(ray_cardinality(g, g.state_index("R"), Side::Left) == RayCardinality::Infinite);
  CHECK(ray_cardinality(g, g.state_index("L"), Side::Left) == RayCardinality::FinitePositive);
  auto loop = LabeledGraph(Alphabet({"0"}), {"s"}, {{"s", "0", "s"}});
  CHECK(ray_cardinality(loop, 0, Side::Right) == RayCardinality::FinitePositive);
  CHECK(ray_cardinality(loop, 0, Side::Left) == RayCardinality::FinitePositive);
  auto nondet = LabeledGraph(binary(), {"a", "b"}, {{"a", "0", "a"}, {"a", "0", "b"}, {"b", "0", "b"}});
  CHECK_THROWS_AS(ray_cardinality(nondet, 0, Side::Right), ContractError);
  // A state with no outgoing edge has no right rays.
  auto sink = LabeledGraph(binary(), {"a", "b"}, {{"a", "0", "a"}, {"a", "1", "b"}});
  CHECK(ray_cardinality(sink, sink.state_index("b"), Side::Right) == RayCardinality::Zero);
}

TEST_CASE("cylinder classes") {
  auto g = sunny_side_up();
  CHECK(cylinder_class(g, word(g, "010")) == CylinderClass::Finite);
  CHECK(cylinder_class(g, word(g, "00")) == CylinderClass::Infinite);
  CHECK(cylinder_class(g, word(g, "1")) == CylinderClass::Finite);
  CHECK(cylinder_class(golden_mean(), word(golden_mean(), "11")) == CylinderClass::Empty);
  CHECK(cylinder_class(golden_mean(), word(golden_mean(), "101")) == CylinderClass::Infinite);
}

TEST_CASE("growth oracle examples") {
  auto g = sunny_side_up();
  // The only point through a centered 1 is ...0001000..., so every
  // extension length has a single word.
  CHECK(cylinder_growth_oracle(g, word(g, "1"), 4) == std::vector<std::uint64_t>{1, 1, 1, 1, 1});
  CHECK(brute_growth(g, word(g, "1"), 4) == std::vector<std::uint64_t>{1, 1, 1, 1, 1});
  CHECK(cylinder_growth_oracle(g, word(g, "0"), 4) == std::vector<std::uint64_t>{1, 3, 5, 7, 9});
  CHECK(cylinder_growth_oracle(g, word(g, "010"), 3) == std::vector<std::uint64_t>{1, 1, 1, 1});
  auto gm = golden_mean();
  auto c = cylinder_growth_oracle(gm, word(gm, "0"), 8);
  for (std::size_t k = 1; k < c.size(); ++k) CHECK(c[k] > c[k - 1]);
  CHECK_FALSE(growth_verdict(g, word(g, "010")).infinite);
  CHECK(growth_verdict(g, word(g, "00")).infinite);
}

TEST_CASE("growth oracle agrees with brute force") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    auto g = random_trim_graph(rng, 4);
    for (const auto& w : all_words(2, 3))
      CHECK(cylinder_growth_oracle(g, w, 3) == brute_growth(g, w, 3));
  }
}

TEST_CASE("derive and rank on the reference shifts") {
  auto s = sunny_side_up();
  auto d = derive(s);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(language_words(d, n) == std::set<Word>{Word(n, 0)});
  auto chain = rank_chain(s);
  CHECK(chain.rank == 2);
  CHECK(chain.perfect_kernel_empty);
  CHECK(chain.presentations.back().empty());
  CHECK(is_countable(s));

  auto gm = golden_mean();
  CHECK(language_equal(derive(gm), gm));
  CHECK(rank_chain(gm).rank == 0);
  CHECK_FALSE(is_countable(gm));

  auto t = two_loops();
  auto tc = rank_chain(t);
  CHECK(tc.rank == 2);
  CHECK(tc.perfect_kernel_empty);
  REQUIRE(tc.presentations.size() == 3);
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(language_words(tc.presentations[1], n) == std::set<Word>{Word(n, 0), Word(n, 1)});

  CHECK(derive(LabeledGraph()).empty());
  CHECK(is_countable(LabeledGraph()));
}

TEST_CASE("language inclusion") {
  auto gm = golden_mean();
  auto full = full_shift(2);
  CHECK(language_included(gm, full));
  CHECK_FALSE(language_included(full, gm));
  CHECK(language_included(LabeledGraph(), gm));
  CHECK(language_equal(gm, resolve_left(gm)));
}

TEST_CASE("derivative properties on random graphs") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_trim_graph(rng, 5);
    auto rc = resolve_companions(g);
    auto d = derive(g);
    CHECK(language_included(d, g));
    for (const auto& w : all_words(2, 5)) {
      auto cls = cylinder_class(rc, w);
      CHECK((cls == CylinderClass::Empty) == !accepts(g, w));
      CHECK(accepts(d, w) == (cls == CylinderClass::Infinite));
      if (cls != CylinderClass::Empty) CHECK((cls == CylinderClass::Infinite) == growth_verdict(g, w).infinite);
    }
    auto chain = rank_chain(g);
    if (chain.presentations.size() > 2) CHECK(language_equal(derive(chain.presentations[1]), chain.presentations[2]));
    // Every word of the fixpoint has an infinite cylinder there.
    const auto& fix = chain.presentations.back();
    for (const auto& w : all_words(2, 4))
      if (accepts(fix, w)) CHECK(cylinder_class(fix, w) == CylinderClass::Infinite);
    // Another presentation of the same shift yields the same derivative.
    CHECK(language_equal(derive(resolve_right(g)), d));
    CHECK(chain.rank <= context_partition(g, 64).classes.size());
  }
}
