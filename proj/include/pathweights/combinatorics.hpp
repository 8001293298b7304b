#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pathweights {

/// Vertices of K_n are numbered 1..n.
using Vertex = int;

inline constexpr int kDefaultMaxVertices = 12;

/// Upper bound on n for anything that materializes paths. Counting alone is
/// not capped (beyond 64-bit overflow).
struct PathLimits {
  int max_n = kDefaultMaxVertices;
};

/// An unoriented simple path. Stored with first() < last(); the interior is
/// reversed on construction when the endpoints are given the other way round,
/// so a path and its reversal compare equal.
class SimplePath {
 public:
  /// Throws InvalidParameter on repeated vertices or non-positive ids.
  SimplePath(Vertex from, std::vector<Vertex> interior, Vertex to);

  static SimplePath from_sequence(const std::vector<Vertex>& vertices);

  Vertex first() const { return first_; }
  Vertex last() const { return last_; }
  const std::vector<Vertex>& interior() const { return interior_; }
  std::size_t edge_count() const { return interior_.size() + 1; }
  bool contains(Vertex v) const;

  /// Full vertex sequence starting at `endpoint`, which must be first() or last().
  std::vector<Vertex> vertices_from(Vertex endpoint) const;
  /// Interior sequence read from `endpoint`.
  std::vector<Vertex> interior_from(Vertex endpoint) const;
  std::vector<Vertex> vertices() const { return vertices_from(first_); }

  /// "(1,3,2)" style, listed from first().
  std::string str() const;

  friend bool operator==(const SimplePath&, const SimplePath&) = default;
  friend auto operator<=>(const SimplePath&, const SimplePath&) = default;

 private:
  Vertex first_;
  Vertex last_;
  std::vector<Vertex> interior_;
};

/// N_n = 1 + (n-2) + (n-2)(n-3) + ... + (n-2)!, the number of simple paths
/// between two fixed vertices of K_n. Throws InvalidParameter for n < 2 and
/// LimitExceeded if the value does not fit in 64 bits.
std::uint64_t count_simple_paths(int n);

/// Number of simple i-j paths with exactly `edges` edges: C(n-2, k-1)(k-1)!.
std::uint64_t count_paths_with_edges(int n, int edges);

/// All simple i-j paths of K_n, ordered by edge count and then
/// lexicographically on the interior read from i.
std::vector<SimplePath> enumerate_paths(int n, Vertex i, Vertex j, PathLimits limits = {});

/// N_n - 1 == (n-2) * N_{n-1}. Requires n >= 3.
bool check_count_identity(int n);

void require_vertex(int n, Vertex v);

}  // namespace pathweights
