#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pathweights/combinatorics.hpp"
#include "pathweights/forward.hpp"
#include "pathweights/rat.hpp"

namespace pathweights {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// The canonical i-j path list of K_n with a reverse lookup from the
/// interior sequence (read from i) to the path's position.
class PathTable {
 public:
  PathTable(int n, Vertex i, Vertex j);

  int n() const { return n_; }
  Vertex i() const { return i_; }
  Vertex j() const { return j_; }
  const std::vector<SimplePath>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }

  /// Throws InvalidParameter when no such path exists.
  std::size_t index_of(const std::vector<Vertex>& interior_from_i) const;
  std::size_t index_of(const SimplePath& p) const;

 private:
  int n_;
  Vertex i_;
  Vertex j_;
  std::vector<SimplePath> paths_;
  std::map<std::vector<Vertex>, std::size_t> lookup_;
};

/// A value attached to every simple i-j path of K_n.
class IndexedFamily {
 public:
  /// `values` follows enumerate_paths(n, i, j) order.
  IndexedFamily(int n, Vertex i, Vertex j, std::vector<Rat> values);

  static IndexedFamily from_graph(const WeightedCompleteGraph& g, Vertex i, Vertex j);
  /// Every i-j path must appear exactly once.
  static IndexedFamily from_path_values(int n, Vertex i, Vertex j,
                                        const std::vector<std::pair<SimplePath, Rat>>& entries);

  int n() const { return table_->n(); }
  Vertex i() const { return table_->i(); }
  Vertex j() const { return table_->j(); }
  const std::vector<SimplePath>& paths() const { return table_->paths(); }
  const std::vector<Rat>& values() const { return values_; }
  const PathTable& table() const { return *table_; }

  const Rat& at(const std::vector<Vertex>& interior_from_i) const;
  const Rat& value(const SimplePath& p) const;
  void set_value(const SimplePath& p, Rat v);

  RatMultiset multiset() const { return RatMultiset(values_); }

  friend bool operator==(const IndexedFamily& a, const IndexedFamily& b) {
    return a.n() == b.n() && a.i() == b.i() && a.j() == b.j() && a.values_ == b.values_;
  }

 private:
  IndexedFamily(std::shared_ptr<const PathTable> table, std::vector<Rat> values);

  std::shared_ptr<const PathTable> table_;
  std::vector<Rat> values_;
};

/// Half of F(i,l,m,j) + F(i,m,l,j) - F(i,l,j) - F(i,m,j): the l-m edge weight.
Rat edge_weight_from_path_values(const IndexedFamily& f, Vertex l, Vertex m);

struct ConditionAResult {
  bool holds = true;
  /// Paths whose value differs from the expansion, canonical order.
  std::vector<SimplePath> violations;
};

struct ConditionBResult {
  bool holds = true;
  /// Ordered triples (l, o, m) for which the cyclic identity fails.
  std::vector<std::array<Vertex, 3>> violations;
};

/// Every path with more than two interior vertices must equal the expansion
/// built from the paths with one and two interior vertices.
ConditionAResult check_condition_a(const IndexedFamily& f);

/// F(i,m,l,j) + F(i,o,m,j) + F(i,l,o,j) == F(i,l,m,j) + F(i,m,o,j) + F(i,o,l,j)
/// for all distinct interior l, o, m.
ConditionBResult check_condition_b(const IndexedFamily& f);

/// Value of an i-j path with at least one interior vertex rebuilt from the
/// family's values on paths with one or two interior vertices.
Rat expand_path_value(const IndexedFamily& f, const SimplePath& p);

/// Exact solve of the endpoint-edge system. Variables are w(i,l) for
/// ascending interior l, then w(j,l) for ascending l.
struct KernelReport {
  std::vector<VertexPair> variables;
  std::size_t rank = 0;
  std::size_t kernel_dimension = 0;
  std::vector<std::vector<Rat>> kernel_basis;
  /// (variable index, value) for every free variable.
  std::vector<std::pair<std::size_t, Rat>> gauge_assignment;
};

struct SingleReconstruction {
  WeightedCompleteGraph graph;
  KernelReport kernel;
};

/// Builds a graph whose i-j path weights reproduce `f` exactly. Throws
/// RealizabilityViolation if the endpoint system is inconsistent or the
/// result does not reproduce every value.
SingleReconstruction reconstruct_single(const IndexedFamily& f);

enum class SearchStatus { found, none, budget_exceeded };

const char* to_string(SearchStatus s);

struct IndexingSearch {
  SearchStatus status = SearchStatus::none;
  std::optional<IndexedFamily> indexing;
  std::uint64_t nodes = 0;
};

/// Looks for an assignment of the elements of `y` to the i-j paths of K_n
/// satisfying both conditions. `budget` caps the number of search nodes.
IndexingSearch find_indexing(const RatMultiset& y, int n, Vertex i, Vertex j, std::uint64_t budget = kDefaultBudget);

struct SingleRealizability {
  SearchStatus status = SearchStatus::none;
  std::optional<WeightedCompleteGraph> witness;
  std::uint64_t nodes = 0;
};

/// Decides whether `y` is D_{1,2}(G) for some weighted K_n, returning a
/// verified witness when it is.
SingleRealizability is_realizable_single(const RatMultiset& y, int n, std::uint64_t budget = kDefaultBudget);

}  // namespace pathweights
