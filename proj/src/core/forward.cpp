#include "pathweights/forward.hpp"

#include <algorithm>
#include <string>

#include "pathweights/errors.hpp"

namespace pathweights {

std::vector<VertexPair> all_pairs(int n) {
  std::vector<VertexPair> pairs;
  for (Vertex l = 1; l <= n; ++l) {
    for (Vertex m = l + 1; m <= n; ++m) pairs.emplace_back(l, m);
  }
  return pairs;
}

WeightedCompleteGraph::WeightedCompleteGraph(int n) : n_(n) {
  if (n < 2) throw InvalidParameter("a weighted complete graph needs n >= 2");
  weights_.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
}

WeightedCompleteGraph WeightedCompleteGraph::from_edge_values(int n, const EdgeValues& weights) {
  WeightedCompleteGraph g(n);
  for (const auto& [pair, w] : weights) {
    const auto [l, m] = pair;
    require_vertex(n, l);
    require_vertex(n, m);
    if (l >= m) throw InvalidParameter("edge keys must be (smaller, larger) vertex pairs");
    g.set_weight(l, m, w);
  }
  if (weights.size() != g.weights_.size()) {
    throw InvalidParameter("edge values must cover all " + std::to_string(g.weights_.size()) + " pairs");
  }
  return g;
}

std::size_t WeightedCompleteGraph::index_of(Vertex l, Vertex m) const {
  require_vertex(n_, l);
  require_vertex(n_, m);
  if (l == m) throw InvalidParameter("no edge joins a vertex to itself");
  if (l > m) std::swap(l, m);
  // Row-major upper triangle, 1-based vertices.
  const auto a = static_cast<std::size_t>(l - 1);
  const auto b = static_cast<std::size_t>(m - 1);
  const auto n = static_cast<std::size_t>(n_);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

const Rat& WeightedCompleteGraph::weight(Vertex l, Vertex m) const { return weights_[index_of(l, m)]; }

void WeightedCompleteGraph::set_weight(Vertex l, Vertex m, Rat w) { weights_[index_of(l, m)] = std::move(w); }

EdgeValues WeightedCompleteGraph::edge_values() const {
  EdgeValues out;
  for (const auto& [l, m] : all_pairs(n_)) out.emplace(VertexPair{l, m}, weight(l, m));
  return out;
}

RatMultiset::RatMultiset(std::vector<Rat> values) {
  std::sort(values.begin(), values.end());
  for (auto& v : values) {
    if (!entries_.empty() && entries_.back().value == v) {
      ++entries_.back().multiplicity;
    } else {
      entries_.push_back({std::move(v), 1});
    }
  }
  cardinality_ = values.size();
}

RatMultiset RatMultiset::from_entries(std::vector<MultisetEntry> entries) {
  RatMultiset m;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].multiplicity == 0) throw InvalidParameter("multiset multiplicities must be positive");
    if (k > 0 && !(entries[k - 1].value < entries[k].value)) {
      throw InvalidParameter("multiset values must be strictly increasing");
    }
    m.cardinality_ += entries[k].multiplicity;
  }
  m.entries_ = std::move(entries);
  return m;
}

std::vector<MultisetEntry>::iterator RatMultiset::find_slot(const Rat& value) {
  return std::lower_bound(entries_.begin(), entries_.end(), value,
                          [](const MultisetEntry& e, const Rat& v) { return e.value < v; });
}

std::vector<MultisetEntry>::const_iterator RatMultiset::find_slot(const Rat& value) const {
  return std::lower_bound(entries_.begin(), entries_.end(), value,
                          [](const MultisetEntry& e, const Rat& v) { return e.value < v; });
}

void RatMultiset::insert(const Rat& value, std::uint64_t count) {
  if (count == 0) return;
  auto it = find_slot(value);
  if (it != entries_.end() && it->value == value) {
    it->multiplicity += count;
  } else {
    entries_.insert(it, {value, count});
  }
  cardinality_ += count;
}

bool RatMultiset::erase_one(const Rat& value) {
  auto it = find_slot(value);
  if (it == entries_.end() || it->value != value) return false;
  if (--it->multiplicity == 0) entries_.erase(it);
  --cardinality_;
  return true;
}

std::uint64_t RatMultiset::count(const Rat& value) const {
  auto it = find_slot(value);
  return (it != entries_.end() && it->value == value) ? it->multiplicity : 0;
}

std::vector<Rat> RatMultiset::expanded() const {
  std::vector<Rat> out;
  out.reserve(cardinality_);
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatMultiset& m) {
  os << '{';
  bool first = true;
  for (const auto& v : m.expanded()) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  return os << '}';
}

RatMultiset OrderedPairing::left() const {
  std::vector<Rat> values;
  values.reserve(pairs.size());
  for (const auto& p : pairs) values.push_back(p.first);
  return RatMultiset(std::move(values));
}

RatMultiset OrderedPairing::right() const {
  std::vector<Rat> values;
  values.reserve(pairs.size());
  for (const auto& p : pairs) values.push_back(p.second);
  return RatMultiset(std::move(values));
}

Rat path_weight(const WeightedCompleteGraph& g, const SimplePath& p) {
  const auto seq = p.vertices();
  Rat total;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) total += g.weight(seq[k], seq[k + 1]);
  return total;
}

RatMultiset path_multiset(const WeightedCompleteGraph& g, Vertex i, Vertex j) {
  std::vector<Rat> values;
  for (const auto& p : enumerate_paths(g.n(), i, j)) values.push_back(path_weight(g, p));
  return RatMultiset(std::move(values));
}

namespace {

struct HWalker {
  int n;
  const EdgeValues& y;
  Vertex target;
  std::vector<bool> visited;
  std::vector<Rat> out;

  const Rat& value(Vertex a, Vertex b) const { return y.at(make_pair_key(a, b)); }

  // Extends a partial sequence ending at `at` whose prefix sums to `sum`.
  void walk(Vertex at, const Rat& sum) {
    out.push_back(sum + value(at, target));
    for (Vertex next = 1; next <= n; ++next) {
      if (visited[next] || next == target) continue;
      visited[next] = true;
      walk(next, sum + value(at, next));
      visited[next] = false;
    }
  }
};

}  // namespace

RatMultiset h_map(int n, const EdgeValues& y, Vertex i, Vertex j) {
  if (n < 2) throw InvalidParameter("h_map needs n >= 2");
  require_vertex(n, i);
  require_vertex(n, j);
  if (i == j) throw InvalidParameter("h_map needs distinct endpoints");
  for (const auto& [l, m] : all_pairs(n)) {
    if (!y.contains({l, m})) {
      throw InvalidParameter("h_map: no value for pair {" + std::to_string(l) + "," + std::to_string(m) + "}");
    }
  }
  HWalker walker{n, y, j, std::vector<bool>(static_cast<std::size_t>(n) + 1, false), {}};
  walker.visited[i] = true;
  walker.walk(i, Rat{});
  return RatMultiset(std::move(walker.out));
}

RatMultiset multiset_difference(const RatMultiset& s, const RatMultiset& t, const OrderedPairing& f) {
  if (s.cardinality() != t.cardinality()) throw InvalidParameter("difference needs equal cardinalities");
  if (f.left() != s || f.right() != t) throw InvalidParameter("pairing does not cover both multisets exactly");
  std::vector<Rat> diffs;
  diffs.reserve(f.pairs.size());
  for (const auto& [a, b] : f.pairs) diffs.push_back(a - b);
  return RatMultiset(std::move(diffs));
}

}  // namespace pathweights
