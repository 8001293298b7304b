#include "pathweights/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "pathweights/errors.hpp"

namespace pathweights {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw LimitExceeded("path count overflows 64 bits");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw LimitExceeded("path count overflows 64 bits");
  }
  return a + b;
}

// Appends every ordered sequence of exactly `length` distinct vertices from
// `pool` (ascending) in lexicographic order.
void extend_sequences(const std::vector<Vertex>& pool, std::size_t length, std::vector<Vertex>& current,
                      std::vector<bool>& used, Vertex from, Vertex to, std::vector<SimplePath>& out) {
  if (current.size() == length) {
    out.emplace_back(from, current, to);
    return;
  }
  for (std::size_t idx = 0; idx < pool.size(); ++idx) {
    if (used[idx]) continue;
    used[idx] = true;
    current.push_back(pool[idx]);
    extend_sequences(pool, length, current, used, from, to, out);
    current.pop_back();
    used[idx] = false;
  }
}

}  // namespace

SimplePath::SimplePath(Vertex from, std::vector<Vertex> interior, Vertex to)
    : first_(from), last_(to), interior_(std::move(interior)) {
  if (from <= 0 || to <= 0) throw InvalidParameter("vertex ids start at 1");
  if (from == to) throw InvalidParameter("path endpoints must differ");
  std::vector<Vertex> all = interior_;
  all.push_back(from);
  all.push_back(to);
  std::sort(all.begin(), all.end());
  if (all.front() <= 0) throw InvalidParameter("vertex ids start at 1");
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidParameter("simple path repeats a vertex");
  }
  if (first_ > last_) {
    std::swap(first_, last_);
    std::reverse(interior_.begin(), interior_.end());
  }
}

SimplePath SimplePath::from_sequence(const std::vector<Vertex>& vertices) {
  if (vertices.size() < 2) throw InvalidParameter("a path needs at least two vertices");
  return SimplePath(vertices.front(), std::vector<Vertex>(vertices.begin() + 1, vertices.end() - 1),
                    vertices.back());
}

bool SimplePath::contains(Vertex v) const {
  return v == first_ || v == last_ || std::find(interior_.begin(), interior_.end(), v) != interior_.end();
}

std::vector<Vertex> SimplePath::interior_from(Vertex endpoint) const {
  if (endpoint == first_) return interior_;
  if (endpoint != last_) throw InvalidParameter("vertex is not an endpoint of the path");
  return {interior_.rbegin(), interior_.rend()};
}

std::vector<Vertex> SimplePath::vertices_from(Vertex endpoint) const {
  std::vector<Vertex> seq;
  seq.reserve(interior_.size() + 2);
  seq.push_back(endpoint);
  for (Vertex v : interior_from(endpoint)) seq.push_back(v);
  seq.push_back(endpoint == first_ ? last_ : first_);
  return seq;
}

std::string SimplePath::str() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (Vertex v : vertices()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << ')';
  return os.str();
}

void require_vertex(int n, Vertex v) {
  if (v < 1 || v > n) {
    throw InvalidParameter("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
  }
}

std::uint64_t count_simple_paths(int n) {
  if (n < 2) throw InvalidParameter("count_simple_paths needs n >= 2");
  // 1 + (n-2) + (n-2)(n-3) + ... : running falling factorial.
  std::uint64_t total = 1;
  std::uint64_t term = 1;
  for (int k = n - 2; k >= 1; --k) {
    term = checked_mul(term, static_cast<std::uint64_t>(k));
    total = checked_add(total, term);
  }
  return total;
}

std::uint64_t count_paths_with_edges(int n, int edges) {
  if (n < 2) throw InvalidParameter("count_paths_with_edges needs n >= 2");
  if (edges < 1 || edges > n - 1) return 0;
  // (n-2)! / (n-1-edges)!
  std::uint64_t value = 1;
  for (int k = 0; k < edges - 1; ++k) value = checked_mul(value, static_cast<std::uint64_t>(n - 2 - k));
  return value;
}

std::vector<SimplePath> enumerate_paths(int n, Vertex i, Vertex j, PathLimits limits) {
  if (n < 2) throw InvalidParameter("enumerate_paths needs n >= 2");
  if (n > limits.max_n) {
    throw LimitExceeded("n = " + std::to_string(n) + " exceeds the path enumeration cap of " +
                        std::to_string(limits.max_n));
  }
  require_vertex(n, i);
  require_vertex(n, j);
  if (i == j) throw InvalidParameter("enumerate_paths needs distinct endpoints");

  std::vector<Vertex> pool;
  for (Vertex v = 1; v <= n; ++v) {
    if (v != i && v != j) pool.push_back(v);
  }
  std::vector<SimplePath> out;
  out.reserve(count_simple_paths(n));
  std::vector<Vertex> current;
  std::vector<bool> used(pool.size(), false);
  for (std::size_t length = 0; length <= pool.size(); ++length) {
    extend_sequences(pool, length, current, used, i, j, out);
  }
  return out;
}

bool check_count_identity(int n) {
  if (n < 3) throw InvalidParameter("check_count_identity needs n >= 3");
  return count_simple_paths(n) - 1 == static_cast<std::uint64_t>(n - 2) * count_simple_paths(n - 1);
}

}  // namespace pathweights
