#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pathweights/errors.hpp"
#include "pathweights/generator.hpp"
#include "pathweights/singlepair.hpp"

using namespace pathweights;

namespace {

// Endpoint-edge deviations in the variable order of the kernel report.
std::vector<Rat> endpoint_deviation(const KernelReport& k, const WeightedCompleteGraph& a,
                                    const WeightedCompleteGraph& b) {
  std::vector<Rat> d;
  for (const auto& [l, m] : k.variables) d.push_back(a.weight(l, m) - b.weight(l, m));
  return d;
}

RatMultiset perturbed(const RatMultiset& y, std::size_t index, const Rat& by) {
  auto values = y.expanded();
  values[index] += by;
  return RatMultiset(values);
}

}  // namespace

TEST_CASE("edge weight from path values") {
  const auto f = IndexedFamily::from_graph(oracle::g4(), 1, 2);
  CHECK(edge_weight_from_path_values(f, 3, 4) == 6);
  CHECK(edge_weight_from_path_values(f, 4, 3) == 6);
  CHECK(edge_weight_from_path_values(IndexedFamily::from_graph(WeightedCompleteGraph(5), 2, 4), 1, 5) == 0);
  CHECK_THROWS_AS(edge_weight_from_path_values(f, 1, 3), InvalidParameter);
  CHECK_THROWS_AS(edge_weight_from_path_values(f, 3, 3), InvalidParameter);
}

TEST_CASE("edge weights are recovered for every interior pair") {
  for (int n = 4; n <= 6; ++n) {
    const auto g = random_graph(n, 300 + n);
    for (const auto& [i, j] : all_pairs(n)) {
      const auto f = IndexedFamily::from_graph(g, i, j);
      for (const auto& [l, m] : all_pairs(n)) {
        if (l == i || l == j || m == i || m == j) continue;
        CHECK(edge_weight_from_path_values(f, l, m) == g.weight(l, m));
      }
    }
  }
}

TEST_CASE("indexed family lookups") {
  const auto f = IndexedFamily::from_graph(oracle::g4(), 1, 2);
  CHECK(f.at({}) == 1);
  CHECK(f.at({4, 3}) == 13);
  CHECK(f.value(SimplePath(2, {3, 4}, 1)) == 13);
  CHECK(f.multiset() == oracle::path_multiset(oracle::g4(), 1, 2));
  CHECK_THROWS_AS(f.at({3, 3}), InvalidParameter);
  CHECK_THROWS_AS(IndexedFamily(4, 1, 2, {1, 2, 3}), InvalidParameter);

  std::vector<std::pair<SimplePath, Rat>> entries;
  for (const auto& p : enumerate_paths(4, 1, 2)) entries.emplace_back(p, f.value(p));
  std::reverse(entries.begin(), entries.end());
  CHECK(IndexedFamily::from_path_values(4, 1, 2, entries) == f);
  entries.pop_back();
  CHECK_THROWS_AS(IndexedFamily::from_path_values(4, 1, 2, entries), InvalidParameter);
  entries.push_back(entries.front());
  CHECK_THROWS_AS(IndexedFamily::from_path_values(4, 1, 2, entries), InvalidParameter);
}

TEST_CASE("condition a") {
  for (int n = 4; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(check_condition_a(IndexedFamily::from_graph(random_graph(n, seed), 1, n)).holds);
  }
  CHECK(check_condition_a(IndexedFamily(4, 1, 2, {9, 8, 7, 6, 5})).holds);

  auto f = IndexedFamily::from_graph(random_graph(5, 11), 1, 2);
  const SimplePath long_path(1, {4, 3, 5}, 2);
  f.set_value(long_path, f.value(long_path) + 1);
  const auto r = check_condition_a(f);
  CHECK_FALSE(r.holds);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations.front() == long_path);
}

TEST_CASE("condition b") {
  for (int n = 5; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(check_condition_b(IndexedFamily::from_graph(random_graph(n, seed), 2, 3)).holds);
  }
  CHECK(check_condition_b(IndexedFamily(4, 1, 2, {9, 8, 7, 6, 5})).holds);

  for (int n = 5; n <= 6; ++n) {
    auto f = IndexedFamily::from_graph(random_graph(n, 50 + n), 1, 2);
    const Vertex l = 3, m = 4;
    const SimplePath p(1, {m, l}, 2);
    f.set_value(p, f.value(p) + 1);
    const auto r = check_condition_b(f);
    CHECK_FALSE(r.holds);
    std::set<Vertex> others;
    for (const auto& t : r.violations) {
      const std::set<Vertex> s(t.begin(), t.end());
      CHECK(s.count(l) == 1);
      CHECK(s.count(m) == 1);
      for (Vertex v : s) {
        if (v != l && v != m) others.insert(v);
      }
    }
    std::set<Vertex> expected;
    for (Vertex o = 5; o <= n; ++o) expected.insert(o);
    CHECK(others == expected);
  }
}

TEST_CASE("path value expansion") {
  const auto f4 = IndexedFamily::from_graph(oracle::g4(), 1, 2);
  CHECK(expand_path_value(f4, SimplePath(1, {3, 4}, 2)) == 13);
  CHECK(expand_path_value(f4, SimplePath(1, {3}, 2)) == 6);
  CHECK_THROWS_AS(expand_path_value(f4, SimplePath(1, {}, 2)), InvalidParameter);

  const auto g = random_graph(6, 77);
  const auto f = IndexedFamily::from_graph(g, 2, 6);
  for (const auto& p : f.paths()) {
    if (p.interior().size() >= 3) CHECK(expand_path_value(f, p) == path_weight(g, p));
  }
}

TEST_CASE("reconstruction on the four-vertex example fixes the gauge at the last variable") {
  const auto g = oracle::g4();
  const auto rec = reconstruct_single(IndexedFamily::from_graph(g, 1, 2));
  const auto& h = rec.graph;
  CHECK(h.weight(1, 2) == 1);
  CHECK(h.weight(3, 4) == 6);
  for (const auto& p : enumerate_paths(4, 1, 2)) CHECK(path_weight(h, p) == path_weight(g, p));
  const Rat t = h.weight(1, 3) - g.weight(1, 3);
  CHECK(h.weight(1, 4) - g.weight(1, 4) == t);
  CHECK(h.weight(2, 3) - g.weight(2, 3) == -t);
  CHECK(h.weight(2, 4) - g.weight(2, 4) == -t);
  CHECK(t == 5);
  CHECK(h.weight(2, 4) == 0);

  CHECK(rec.kernel.variables == std::vector<VertexPair>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(rec.kernel.rank == 3);
  CHECK(rec.kernel.kernel_dimension == 1);
  REQUIRE(rec.kernel.gauge_assignment.size() == 1);
  CHECK(rec.kernel.gauge_assignment.front().first == 3);
  CHECK(rec.kernel.gauge_assignment.front().second == 0);
}

TEST_CASE("reconstruction round trip") {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto g = random_graph(n, 900 + seed);
      for (const auto& [i, j] : all_pairs(n)) {
        const auto f = IndexedFamily::from_graph(g, i, j);
        const auto rec = reconstruct_single(f);
        CHECK(IndexedFamily::from_graph(rec.graph, i, j) == f);
        for (const auto& [l, m] : all_pairs(n)) {
          if (l != i && l != j && m != i && m != j) CHECK(rec.graph.weight(l, m) == g.weight(l, m));
        }
        CHECK(rec.graph.weight(i, j) == g.weight(i, j));
        if (n >= 3) {
          CHECK(rec.kernel.kernel_dimension == 1);
          CHECK(rec.kernel.rank == rec.kernel.variables.size() - 1);
          CHECK(oracle::in_span(rec.kernel.kernel_basis, endpoint_deviation(rec.kernel, rec.graph, g)));
        }
      }
    }
  }
}

TEST_CASE("zero family reconstructs the zero graph") {
  for (int n = 2; n <= 6; ++n) {
    const auto rec = reconstruct_single(IndexedFamily::from_graph(WeightedCompleteGraph(n), 1, 2));
    CHECK(rec.graph == WeightedCompleteGraph(n));
  }
}

TEST_CASE("reconstruction rejects values no graph can produce") {
  auto f = IndexedFamily::from_graph(random_graph(5, 4), 1, 2);
  const SimplePath p(1, {3, 4, 5}, 2);
  f.set_value(p, f.value(p) + Rat(1, 3));
  CHECK_THROWS_AS(reconstruct_single(f), RealizabilityViolation);
}

TEST_CASE("indexing search on small inputs") {
  const auto y = oracle::path_multiset(oracle::g4(), 1, 2);
  const auto s = find_indexing(y, 4, 1, 2);
  REQUIRE(s.status == SearchStatus::found);
  CHECK(s.indexing->multiset() == y);
  CHECK(path_multiset(reconstruct_single(*s.indexing).graph, 1, 2) == y);

  for (int n = 2; n <= 6; ++n) {
    const auto zeros = path_multiset(WeightedCompleteGraph(n), 1, 2);
    const auto z = find_indexing(zeros, n, 1, 2);
    REQUIRE(z.status == SearchStatus::found);
    CHECK(z.indexing->values() == std::vector<Rat>(count_simple_paths(n), Rat(0)));
  }

  const auto two = is_realizable_single(RatMultiset({Rat(7, 2)}), 2);
  REQUIRE(two.status == SearchStatus::found);
  CHECK(two.witness->weight(1, 2) == Rat(7, 2));

  const auto three = is_realizable_single(RatMultiset({Rat(-1), Rat(5)}), 3);
  REQUIRE(three.status == SearchStatus::found);
  CHECK(path_multiset(*three.witness, 1, 2) == RatMultiset({Rat(-1), Rat(5)}));

  CHECK_THROWS_AS(find_indexing(RatMultiset({Rat(1)}), 4, 1, 2), InvalidParameter);
  CHECK_THROWS_AS(is_realizable_single(y, 1), InvalidParameter);
}

TEST_CASE("every four-vertex instance is realizable, in agreement with the brute-force oracle") {
  const auto y = RatMultiset({Rat(1), Rat(6), Rat(8), Rat(13), Rat(14)});
  CHECK(oracle::single_realizable_n4(y));
  const auto r = is_realizable_single(y, 4);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(path_multiset(*r.witness, 1, 2) == y);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto base = path_multiset(random_graph(4, seed), 1, 2);
    for (const auto& candidate : {base, perturbed(base, seed % 5, seed % 2 ? 1 : -1)}) {
      const auto got = is_realizable_single(candidate, 4);
      CHECK((got.status == SearchStatus::found) == oracle::single_realizable_n4(candidate));
      if (got.witness) CHECK(path_multiset(*got.witness, 1, 2) == candidate);
    }
  }
}

TEST_CASE("five-vertex instances") {
  const auto g = random_graph(5, 3);
  const auto y = path_multiset(g, 1, 2);
  const auto yes = is_realizable_single(y, 5);
  REQUIRE(yes.status == SearchStatus::found);
  CHECK(path_multiset(*yes.witness, 1, 2) == y);

  const auto no = is_realizable_single(perturbed(y, 0, 1), 5);
  CHECK(no.status == SearchStatus::none);
  CHECK_FALSE(no.witness.has_value());

  const auto capped = is_realizable_single(perturbed(y, 0, 1), 5, 10);
  CHECK(capped.status == SearchStatus::budget_exceeded);
  CHECK(capped.nodes <= 11);
}

TEST_CASE("search is deterministic") {
  const auto y = path_multiset(random_graph(5, 8), 1, 2);
  const auto a = find_indexing(y, 5, 1, 2);
  const auto b = find_indexing(y, 5, 1, 2);
  CHECK(a.nodes == b.nodes);
  REQUIRE(a.indexing.has_value());
  CHECK(*a.indexing == *b.indexing);
}

TEST_CASE("the endpoint system has a one-dimensional kernel") {
  for (int n = 3; n <= 7; ++n) {
    const auto rec = reconstruct_single(IndexedFamily::from_graph(random_graph(n, 61), 1, 2));
    CHECK(rec.kernel.variables.size() == static_cast<std::size_t>(2 * (n - 2)));
    CHECK(rec.kernel.kernel_dimension == 1);
    REQUIRE(rec.kernel.kernel_basis.size() == 1);
    const auto& v = rec.kernel.kernel_basis.front();
    for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] == (k < v.size() / 2 ? v.front() : -v.front()));
  }
}
