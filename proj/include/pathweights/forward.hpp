#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pathweights/combinatorics.hpp"
#include "pathweights/rat.hpp"

namespace pathweights {

/// Unordered vertex pair, stored as (min, max).
using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair make_pair_key(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

/// All unordered pairs of [n] in lexicographic order.
std::vector<VertexPair> all_pairs(int n);

/// Total or partial assignment of a value to unordered pairs.
using EdgeValues = std::map<VertexPair, Rat>;

/// K_n with a rational weight on each of its C(n,2) edges.
class WeightedCompleteGraph {
 public:
  /// All weights zero. Throws InvalidParameter for n < 2.
  explicit WeightedCompleteGraph(int n);

  /// Throws InvalidParameter unless `weights` covers exactly the pairs of [n].
  static WeightedCompleteGraph from_edge_values(int n, const EdgeValues& weights);

  int n() const { return n_; }
  const Rat& weight(Vertex l, Vertex m) const;
  void set_weight(Vertex l, Vertex m, Rat w);
  EdgeValues edge_values() const;

  friend bool operator==(const WeightedCompleteGraph&, const WeightedCompleteGraph&) = default;

 private:
  std::size_t index_of(Vertex l, Vertex m) const;

  int n_;
  std::vector<Rat> weights_;
};

struct MultisetEntry {
  Rat value;
  std::uint64_t multiplicity;

  friend bool operator==(const MultisetEntry&, const MultisetEntry&) = default;
};

/// Finite multiset of rationals, kept as strictly increasing values with
/// positive multiplicities.
class RatMultiset {
 public:
  RatMultiset() = default;
  explicit RatMultiset(std::vector<Rat> values);

  /// Throws InvalidParameter unless values are strictly increasing and
  /// multiplicities positive.
  static RatMultiset from_entries(std::vector<MultisetEntry> entries);

  void insert(const Rat& value, std::uint64_t count = 1);
  /// Removes one occurrence; returns false if the value is absent.
  bool erase_one(const Rat& value);

  std::uint64_t count(const Rat& value) const;
  bool contains(const Rat& value) const { return count(value) > 0; }
  std::uint64_t cardinality() const { return cardinality_; }
  bool empty() const { return cardinality_ == 0; }
  const std::vector<MultisetEntry>& entries() const { return entries_; }
  /// Every element, with repetition, in increasing order.
  std::vector<Rat> expanded() const;

  friend bool operator==(const RatMultiset& a, const RatMultiset& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<MultisetEntry>::iterator find_slot(const Rat& value);
  std::vector<MultisetEntry>::const_iterator find_slot(const Rat& value) const;

  std::vector<MultisetEntry> entries_;
  std::uint64_t cardinality_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RatMultiset& m);

/// Explicit bijection between two equal-size multisets, listed pair by pair.
struct OrderedPairing {
  std::vector<std::pair<Rat, Rat>> pairs;

  RatMultiset left() const;
  RatMultiset right() const;

  friend bool operator==(const OrderedPairing&, const OrderedPairing&) = default;
};

/// Sum of the edge weights along `p`.
Rat path_weight(const WeightedCompleteGraph& g, const SimplePath& p);

/// D_{i,j}(G): the weights of all simple i-j paths.
RatMultiset path_multiset(const WeightedCompleteGraph& g, Vertex i, Vertex j);

/// h_{i,j}(Y): sums y_{i,i_1} + ... + y_{i_r,j} over every sequence of
/// distinct i_1..i_r outside {i, j}. Throws InvalidParameter if Y misses a pair.
RatMultiset h_map(int n, const EdgeValues& y, Vertex i, Vertex j);

/// {s - f(s)}. Throws InvalidParameter unless `f` pairs `s` against `t` exactly.
RatMultiset multiset_difference(const RatMultiset& s, const RatMultiset& t, const OrderedPairing& f);

}  // namespace pathweights
