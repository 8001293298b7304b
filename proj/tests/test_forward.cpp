#include <doctest.h>

#include "oracles.hpp"
#include "pathweights/errors.hpp"
#include "pathweights/forward.hpp"
#include "pathweights/generator.hpp"

using namespace pathweights;

namespace {

RatMultiset ms(std::initializer_list<Rat> values) { return RatMultiset(std::vector<Rat>(values)); }

}  // namespace

TEST_CASE("path weights on the four-vertex example") {
  const auto g = oracle::g4();
  CHECK(path_weight(g, SimplePath(1, {}, 2)) == 1);
  CHECK(path_weight(g, SimplePath(1, {3}, 2)) == 6);
  CHECK(path_weight(g, SimplePath(1, {3, 4}, 2)) == 13);
  CHECK(path_weight(g, SimplePath(2, {4, 3}, 1)) == 13);
  CHECK_THROWS_AS(path_weight(g, SimplePath(1, {5}, 2)), InvalidParameter);
}

TEST_CASE("path multisets") {
  const auto g = oracle::g4();
  CHECK(path_multiset(g, 1, 2) == ms({1, 6, 8, 13, 13}));
  CHECK(path_multiset(g, 2, 1) == path_multiset(g, 1, 2));
  CHECK_THROWS_AS(path_multiset(g, 2, 2), InvalidParameter);

  WeightedCompleteGraph two(2);
  two.set_weight(1, 2, Rat(7, 3));
  CHECK(path_multiset(two, 1, 2) == ms({Rat(7, 3)}));

  for (int n = 2; n <= 7; ++n) {
    const auto zero = path_multiset(WeightedCompleteGraph(n), 1, n);
    CHECK(zero.cardinality() == count_simple_paths(n));
    CHECK(zero.count(0) == count_simple_paths(n));
  }
}

TEST_CASE("path multisets agree with brute-force summation") {
  for (int n = 2; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = random_graph(n, seed);
      for (const auto& [i, j] : all_pairs(n)) CHECK(path_multiset(g, i, j) == oracle::path_multiset(g, i, j));
    }
  }
}

TEST_CASE("h map") {
  EdgeValues y = {{{1, 2}, Rat(1)}, {{1, 3}, Rat(10)}, {{2, 3}, Rat(100)}};
  CHECK(h_map(3, y, 1, 2) == ms({1, 110}));
  CHECK(h_map(4, oracle::g4().edge_values(), 1, 2) == ms({1, 6, 8, 13, 13}));

  EdgeValues missing = y;
  missing.erase({2, 3});
  CHECK_THROWS_AS(h_map(3, missing, 1, 2), InvalidParameter);
  CHECK_THROWS_AS(h_map(3, y, 1, 1), InvalidParameter);

  const auto zeros = h_map(6, WeightedCompleteGraph(6).edge_values(), 2, 5);
  CHECK(zeros.count(0) == 65);
}

TEST_CASE("h map equals the path multiset of the graph with those weights") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = random_graph(n, 100 + seed);
      for (const auto& [i, j] : all_pairs(n)) CHECK(h_map(n, g.edge_values(), i, j) == path_multiset(g, i, j));
    }
  }
}

TEST_CASE("reversal invariance and cardinality") {
  const auto g = random_graph(6, 9);
  for (const auto& p : enumerate_paths(6, 1, 4)) {
    auto seq = p.vertices();
    std::reverse(seq.begin(), seq.end());
    CHECK(path_weight(g, SimplePath::from_sequence(seq)) == path_weight(g, p));
    CHECK(oracle::walk_weight(g, seq.front(), std::vector<Vertex>(seq.begin() + 1, seq.end() - 1), seq.back()) ==
          path_weight(g, p));
  }
}

TEST_CASE("shifting one edge moves exactly the paths through it") {
  const auto g = random_graph(6, 21);
  auto shifted = g;
  const Rat c(5, 7);
  shifted.set_weight(2, 5, g.weight(2, 5) + c);
  for (const auto& p : enumerate_paths(6, 1, 3)) {
    const auto seq = p.vertices();
    bool uses = false;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) uses = uses || make_pair_key(seq[k], seq[k + 1]) == VertexPair{2, 5};
    CHECK(path_weight(shifted, p) == path_weight(g, p) + (uses ? c : Rat(0)));
  }
}

TEST_CASE("gauge shift at the endpoints leaves D_ij unchanged") {
  for (int n = 3; n <= 6; ++n) {
    const auto g = random_graph(n, 40 + n);
    for (const auto& [i, j] : all_pairs(n)) {
      for (const Rat& t : {Rat(1), Rat(-3, 2)}) {
        auto h = g;
        for (Vertex l = 1; l <= n; ++l) {
          if (l == i || l == j) continue;
          h.set_weight(i, l, g.weight(i, l) + t);
          h.set_weight(j, l, g.weight(j, l) - t);
        }
        CHECK(path_multiset(h, i, j) == path_multiset(g, i, j));
      }
    }
  }
}

TEST_CASE("multiset basics") {
  RatMultiset m = ms({3, 1, 3, Rat(1, 2)});
  CHECK(m.cardinality() == 4);
  CHECK(m.count(3) == 2);
  CHECK(m.entries().front().value == Rat(1, 2));
  CHECK(m.erase_one(3));
  CHECK(m.count(3) == 1);
  CHECK_FALSE(m.erase_one(8));
  m.insert(8, 2);
  CHECK(m.cardinality() == 5);
  CHECK(m == ms({Rat(1, 2), 1, 3, 8, 8}));
  CHECK_THROWS_AS(RatMultiset::from_entries({{Rat(2), 1}, {Rat(1), 1}}), InvalidParameter);
  CHECK_THROWS_AS(RatMultiset::from_entries({{Rat(2), 0}}), InvalidParameter);
}

TEST_CASE("multiset difference under a pairing") {
  const auto s = ms({1, 6, 8, 13, 13});
  CHECK(multiset_difference(s, s, OrderedPairing{{{1, 1}, {6, 6}, {8, 8}, {13, 13}, {13, 13}}}) == ms({0, 0, 0, 0, 0}));

  const auto t = ms({2, 7, 9, 14, 14});
  const OrderedPairing sorted{{{1, 2}, {6, 7}, {8, 9}, {13, 14}, {13, 14}}};
  CHECK(multiset_difference(s, t, sorted) == ms({-1, -1, -1, -1, -1}));

  const OrderedPairing given{{{0, 1}, {1, 0}}};
  CHECK(multiset_difference(ms({0, 1}), ms({1, 0}), given) == ms({-1, 1}));

  CHECK_THROWS_AS(multiset_difference(s, ms({1, 2}), sorted), InvalidParameter);
  const OrderedPairing wrong{{{1, 2}, {6, 7}, {8, 9}, {13, 14}, {6, 14}}};
  CHECK_THROWS_AS(multiset_difference(s, t, wrong), InvalidParameter);
}

TEST_CASE("graph construction checks") {
  CHECK_THROWS_AS(WeightedCompleteGraph(1), InvalidParameter);
  WeightedCompleteGraph g(3);
  CHECK_THROWS_AS(g.weight(1, 1), InvalidParameter);
  CHECK_THROWS_AS(g.weight(0, 2), InvalidParameter);
  EdgeValues partial = {{{1, 2}, Rat(1)}};
  CHECK_THROWS_AS(WeightedCompleteGraph::from_edge_values(3, partial), InvalidParameter);
  const auto g4 = oracle::g4();
  CHECK(WeightedCompleteGraph::from_edge_values(4, g4.edge_values()) == g4);
  CHECK(g4.weight(4, 3) == 6);
}
