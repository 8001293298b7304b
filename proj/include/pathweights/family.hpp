#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathweights/combinatorics.hpp"
#include "pathweights/forward.hpp"
#include "pathweights/singlepair.hpp"

namespace pathweights {

/// One multiset per unordered pair of [n], each of cardinality N_n.
class MultisetFamily {
 public:
  /// All multisets empty; fill with set() before use.
  explicit MultisetFamily(int n);

  static MultisetFamily from_graph(const WeightedCompleteGraph& g);

  int n() const { return n_; }
  const RatMultiset& at(Vertex i, Vertex j) const;
  void set(Vertex i, Vertex j, RatMultiset m);

  /// Throws InvalidParameter unless every multiset has N_n elements.
  void require_complete() const;

  friend bool operator==(const MultisetFamily&, const MultisetFamily&) = default;

 private:
  int n_;
  std::map<VertexPair, RatMultiset> sets_;
};

/// Ordered triple (i, j, k) of distinct vertices; the context of a
/// reciprocal order between D_{i,k} and D_{j,k}.
struct VertexTriple {
  Vertex i;
  Vertex j;
  Vertex k;

  friend auto operator<=>(const VertexTriple&, const VertexTriple&) = default;
};

std::vector<VertexTriple> all_ordered_triples(int n);

/// Blocks of the difference of D_{i,k} and D_{j,k}: l0 and one block per
/// r outside {i, j, k}.
struct DifferencePartition {
  VertexTriple context{};
  RatMultiset l0;
  std::map<Vertex, RatMultiset> lr;

  /// Disjoint union of all blocks.
  RatMultiset merged() const;

  friend bool operator==(const DifferencePartition&, const DifferencePartition&) = default;
};

struct FamilyCertificate {
  int n = 0;
  EdgeValues anchors;
  std::map<VertexTriple, OrderedPairing> orders;
  std::map<VertexTriple, DifferencePartition> partitions;
  VertexPair pivot{1, 2};

  friend bool operator==(const FamilyCertificate&, const FamilyCertificate&) = default;
};

/// The path bijection from i-k paths to j-k paths: a path through j,
/// (i, g, j, e, k), goes to (j, reverse(g), i, e, k); any other (i, d, k)
/// goes to (j, d, k). Listed in canonical i-k order.
std::vector<std::pair<SimplePath, SimplePath>> canonical_path_bijection(int n, Vertex i, Vertex j, Vertex k);

/// Block of an i-k path: 0 when nothing follows j (or j is absent and the
/// path is the edge i-k), else the vertex right after i, or right after j
/// for paths through j.
Vertex canonical_block_of(const SimplePath& path_ik, Vertex i, Vertex j, Vertex k);

OrderedPairing canonical_order_from_graph(const WeightedCompleteGraph& g, Vertex i, Vertex j, Vertex k);

DifferencePartition canonical_partition_from_graph(const WeightedCompleteGraph& g, Vertex i, Vertex j, Vertex k);

/// Anchors are the edge weights; orders and partitions come from the
/// canonical bijection for every ordered triple.
FamilyCertificate certificate_from_graph(const WeightedCompleteGraph& g, VertexPair pivot = {1, 2});

/// Throws MalformedCertificate on missing anchors, triples or blocks, or
/// on blocks of the wrong size.
void require_certificate_structure(const FamilyCertificate& cert);

struct ConditionVerdict {
  bool holds = true;
  std::string detail;
};

ConditionVerdict verify_condition_A(const FamilyCertificate& cert);
ConditionVerdict verify_condition_B(const MultisetFamily& family, const FamilyCertificate& cert);
ConditionVerdict verify_condition_C(const MultisetFamily& family, const FamilyCertificate& cert);

struct CertificateVerdict {
  bool valid = true;
  /// 'A', 'B' or 'C' for the first condition that failed.
  std::optional<char> failed;
  std::string detail;
};

CertificateVerdict verify_certificate(const MultisetFamily& family, const FamilyCertificate& cert);

struct FamilyReconstruction {
  SearchStatus status = SearchStatus::none;
  std::optional<WeightedCompleteGraph> graph;
  std::uint64_t nodes = 0;
};

/// Searches anchor assignments y_{i,k} in D_{i,k}; a full assignment is
/// accepted when its graph reproduces every multiset.
FamilyReconstruction reconstruct_family(const MultisetFamily& family, std::uint64_t budget = kDefaultBudget);

bool verify_family(const WeightedCompleteGraph& g, const MultisetFamily& family);

}  // namespace pathweights
