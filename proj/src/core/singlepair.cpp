#include "pathweights/singlepair.hpp"

#include <algorithm>
#include <string>

#include "pathweights/errors.hpp"
#include "pathweights/linear_system.hpp"

namespace pathweights {

// ---------------------------------------------------------------------------
// Path table and indexed family

PathTable::PathTable(int n, Vertex i, Vertex j) : n_(n), i_(i), j_(j), paths_(enumerate_paths(n, i, j)) {
  for (std::size_t k = 0; k < paths_.size(); ++k) lookup_.emplace(paths_[k].interior_from(i), k);
}

std::size_t PathTable::index_of(const std::vector<Vertex>& interior_from_i) const {
  auto it = lookup_.find(interior_from_i);
  if (it == lookup_.end()) {
    std::string seq;
    for (Vertex v : interior_from_i) seq += std::to_string(v) + ",";
    throw InvalidParameter("no simple path " + std::to_string(i_) + "," + seq + std::to_string(j_));
  }
  return it->second;
}

std::size_t PathTable::index_of(const SimplePath& p) const {
  if (make_pair_key(p.first(), p.last()) != make_pair_key(i_, j_)) {
    throw InvalidParameter("path " + p.str() + " does not join " + std::to_string(i_) + " and " +
                           std::to_string(j_));
  }
  return index_of(p.interior_from(i_));
}

IndexedFamily::IndexedFamily(std::shared_ptr<const PathTable> table, std::vector<Rat> values)
    : table_(std::move(table)), values_(std::move(values)) {
  if (values_.size() != table_->size()) {
    throw InvalidParameter("indexed family needs " + std::to_string(table_->size()) + " values, got " +
                           std::to_string(values_.size()));
  }
}

IndexedFamily::IndexedFamily(int n, Vertex i, Vertex j, std::vector<Rat> values)
    : IndexedFamily(std::make_shared<const PathTable>(n, i, j), std::move(values)) {}

IndexedFamily IndexedFamily::from_graph(const WeightedCompleteGraph& g, Vertex i, Vertex j) {
  auto table = std::make_shared<const PathTable>(g.n(), i, j);
  std::vector<Rat> values;
  values.reserve(table->size());
  for (const auto& p : table->paths()) values.push_back(path_weight(g, p));
  return IndexedFamily(std::move(table), std::move(values));
}

IndexedFamily IndexedFamily::from_path_values(int n, Vertex i, Vertex j,
                                              const std::vector<std::pair<SimplePath, Rat>>& entries) {
  auto table = std::make_shared<const PathTable>(n, i, j);
  std::vector<std::optional<Rat>> slots(table->size());
  for (const auto& [path, value] : entries) {
    auto& slot = slots[table->index_of(path)];
    if (slot) throw InvalidParameter("path " + path.str() + " listed twice");
    slot = value;
  }
  std::vector<Rat> values;
  values.reserve(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) throw InvalidParameter("no value for path " + table->paths()[k].str());
    values.push_back(*slots[k]);
  }
  return IndexedFamily(std::move(table), std::move(values));
}

const Rat& IndexedFamily::at(const std::vector<Vertex>& interior_from_i) const {
  return values_[table_->index_of(interior_from_i)];
}

const Rat& IndexedFamily::value(const SimplePath& p) const { return values_[table_->index_of(p)]; }

void IndexedFamily::set_value(const SimplePath& p, Rat v) { values_[table_->index_of(p)] = std::move(v); }

// ---------------------------------------------------------------------------
// Identities

namespace {

std::vector<Vertex> interior_vertices(int n, Vertex i, Vertex j) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v) {
    if (v != i && v != j) out.push_back(v);
  }
  return out;
}

void require_interior(const IndexedFamily& f, Vertex v) {
  require_vertex(f.n(), v);
  if (v == f.i() || v == f.j()) {
    throw InvalidParameter("vertex " + std::to_string(v) + " is an endpoint, not an interior vertex");
  }
}

// The long-path expansion read off a lookup of one- and two-interior values:
// half of (T(a1,ar) - T(ar,a1) + sum_s T(as,as+1) + T(as+1,as)) minus the
// S(as) for the inner vertices.
template <typename Two, typename One>
Rat expansion(const std::vector<Vertex>& seq, Two two, One one) {
  const std::size_t r = seq.size();
  Rat acc = two(seq.front(), seq.back()) - two(seq.back(), seq.front());
  for (std::size_t s = 0; s + 1 < r; ++s) acc += two(seq[s], seq[s + 1]) + two(seq[s + 1], seq[s]);
  Rat out = acc.half();
  for (std::size_t s = 1; s + 1 < r; ++s) out -= one(seq[s]);
  return out;
}

Rat expansion_on(const IndexedFamily& f, const std::vector<Vertex>& seq) {
  return expansion(
      seq, [&](Vertex a, Vertex b) -> const Rat& { return f.at({a, b}); },
      [&](Vertex a) -> const Rat& { return f.at({a}); });
}

}  // namespace

Rat edge_weight_from_path_values(const IndexedFamily& f, Vertex l, Vertex m) {
  require_interior(f, l);
  require_interior(f, m);
  if (l == m) throw InvalidParameter("edge endpoints must differ");
  return (f.at({l, m}) + f.at({m, l}) - f.at({l}) - f.at({m})).half();
}

ConditionAResult check_condition_a(const IndexedFamily& f) {
  ConditionAResult out;
  const auto& paths = f.paths();
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto seq = paths[k].interior_from(f.i());
    if (seq.size() <= 2) continue;
    if (f.values()[k] != expansion_on(f, seq)) {
      out.holds = false;
      out.violations.push_back(paths[k]);
    }
  }
  return out;
}

ConditionBResult check_condition_b(const IndexedFamily& f) {
  ConditionBResult out;
  const auto inner = interior_vertices(f.n(), f.i(), f.j());
  for (Vertex l : inner) {
    for (Vertex o : inner) {
      if (o == l) continue;
      for (Vertex m : inner) {
        if (m == l || m == o) continue;
        const Rat lhs = f.at({m, l}) + f.at({o, m}) + f.at({l, o});
        const Rat rhs = f.at({l, m}) + f.at({m, o}) + f.at({o, l});
        if (lhs != rhs) {
          out.holds = false;
          out.violations.push_back({l, o, m});
        }
      }
    }
  }
  return out;
}

Rat expand_path_value(const IndexedFamily& f, const SimplePath& p) {
  if (make_pair_key(p.first(), p.last()) != make_pair_key(f.i(), f.j())) {
    throw InvalidParameter("path " + p.str() + " does not join the family's endpoints");
  }
  const auto seq = p.interior_from(f.i());
  if (seq.empty()) throw InvalidParameter("expansion needs at least one interior vertex");
  for (Vertex v : seq) require_vertex(f.n(), v);
  if (seq.size() <= 2) return f.at(seq);
  return expansion_on(f, seq);
}

// ---------------------------------------------------------------------------
// Reconstruction

SingleReconstruction reconstruct_single(const IndexedFamily& f) {
  const int n = f.n();
  const Vertex i = f.i();
  const Vertex j = f.j();
  const auto inner = interior_vertices(n, i, j);
  const std::size_t q = inner.size();

  WeightedCompleteGraph g(n);
  g.set_weight(i, j, f.at({}));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      g.set_weight(inner[a], inner[b], edge_weight_from_path_values(f, inner[a], inner[b]));
    }
  }

  KernelReport kernel;
  for (Vertex l : inner) kernel.variables.push_back({i, l});
  for (Vertex l : inner) kernel.variables.push_back({j, l});

  if (q > 0) {
    // Column a is w(i, inner[a]); column q + b is w(j, inner[b]). One row per
    // path with one or two interior vertices.
    const std::size_t rows = q * q;
    RationalMatrix a(rows, 2 * q);
    std::vector<Rat> rhs;
    rhs.reserve(rows);
    std::size_t row = 0;
    for (std::size_t x = 0; x < q; ++x) {
      for (std::size_t z = 0; z < q; ++z) {
        a.at(row, x) = Rat(1);
        a.at(row, q + z) = Rat(1);
        if (x == z) {
          rhs.push_back(f.at({inner[x]}));
        } else {
          rhs.push_back(f.at({inner[x], inner[z]}) - g.weight(inner[x], inner[z]));
        }
        ++row;
      }
    }
    const LinearSolution sol = solve_exact(std::move(a), std::move(rhs));
    if (!sol.consistent) {
      throw RealizabilityViolation("endpoint-edge system is inconsistent; the family violates the cyclic identity");
    }
    kernel.rank = sol.rank;
    kernel.kernel_dimension = sol.free_columns.size();
    kernel.kernel_basis = sol.kernel_basis;
    for (std::size_t c : sol.free_columns) kernel.gauge_assignment.emplace_back(c, Rat{});
    for (std::size_t x = 0; x < q; ++x) {
      g.set_weight(i, inner[x], sol.solution[x]);
      g.set_weight(j, inner[x], sol.solution[q + x]);
    }
  }

  const auto& paths = f.paths();
  for (std::size_t k = 0; k < paths.size(); ++k) {
    if (path_weight(g, paths[k]) != f.values()[k]) {
      throw RealizabilityViolation("reconstructed graph misses the value of path " + paths[k].str());
    }
  }
  return {std::move(g), std::move(kernel)};
}

// ---------------------------------------------------------------------------
// Indexing search

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::budget_exceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

namespace {

struct BudgetExhausted {};

enum class StepKind {
  free_value,   // branch over every distinct remaining value
  cyclic,       // reverse orientation of a pair, fixed by the cyclic identity
  last_value,   // direct path, takes whatever single value is left
};

struct Step {
  StepKind kind;
  std::size_t path;
  // cyclic: value = T(l,m) - (T(l,v0) - T(v0,l)) - (T(v0,m) - T(m,v0)), stored as
  // path indices {T(l,m), T(l,v0), T(v0,l), T(v0,m), T(m,v0)}.
  std::array<std::size_t, 5> terms{};
  // free_value on a one-interior path: lower bound taken from this earlier path.
  std::optional<std::size_t> not_below = std::nullopt;
};

// A path with three or more interior vertices whose value follows from
// shorter ones: sum of T(as,as+1) minus S(as) over inner positions.
struct ForcedPath {
  std::size_t path;
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
};

class IndexingSearcher {
 public:
  IndexingSearcher(const RatMultiset& y, int n, Vertex i, Vertex j, std::uint64_t budget)
      : table_(std::make_shared<const PathTable>(n, i, j)),
        remaining_(y),
        budget_(budget),
        values_(table_->size()) {
    build_plan(n, i, j);
  }

  IndexingSearch run() {
    IndexingSearch out;
    try {
      if (descend(0)) {
        out.status = SearchStatus::found;
        out.indexing = std::move(result_);
      }
    } catch (const BudgetExhausted&) {
      out.status = SearchStatus::budget_exceeded;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  std::size_t one(Vertex a) const { return table_->index_of(std::vector<Vertex>{a}); }
  std::size_t two(Vertex a, Vertex b) const { return table_->index_of(std::vector<Vertex>{a, b}); }

  void build_plan(int n, Vertex i, Vertex j) {
    const auto inner = interior_vertices(n, i, j);
    const std::size_t q = inner.size();
    std::vector<std::size_t> step_of(table_->size(), 0);
    auto push = [&](Step s) {
      step_of[s.path] = steps_.size();
      steps_.push_back(s);
    };

    if (q >= 1) {
      const Vertex v0 = inner[0];
      push({StepKind::free_value, one(v0)});
      // Pairs with v0, ordered so that the first long path through v0 is
      // fixed after as few choices as possible.
      std::vector<std::pair<Vertex, Vertex>> order;
      if (q == 2) {
        order = {{inner[1], v0}, {v0, inner[1]}};
      } else if (q >= 3) {
        order = {{inner[1], v0}, {v0, inner[2]}, {inner[2], v0}, {v0, inner[1]}};
        for (std::size_t k = 3; k < q; ++k) {
          order.emplace_back(inner[k], v0);
          order.emplace_back(v0, inner[k]);
        }
      }
      for (const auto& [a, b] : order) push({StepKind::free_value, two(a, b)});
      // Interior relabelings preserve validity, so the one-interior values
      // may be taken in non-decreasing vertex order.
      for (std::size_t k = 1; k < q; ++k) {
        Step s{StepKind::free_value, one(inner[k])};
        s.not_below = one(inner[k - 1]);
        push(s);
      }
      for (std::size_t a = 1; a < q; ++a) {
        for (std::size_t b = a + 1; b < q; ++b) {
          const Vertex l = inner[a];
          const Vertex m = inner[b];
          push({StepKind::free_value, two(l, m)});
          Step s{StepKind::cyclic, two(m, l)};
          s.terms = {two(l, m), two(l, v0), two(v0, l), two(v0, m), two(m, v0)};
          push(s);
        }
      }
    }
    push({StepKind::last_value, table_->index_of(std::vector<Vertex>{})});

    forced_at_.assign(steps_.size(), {});
    for (std::size_t k = 0; k < table_->size(); ++k) {
      const auto seq = table_->paths()[k].interior_from(i);
      if (seq.size() < 3) continue;
      ForcedPath fp{k, {}, {}};
      std::size_t ready = 0;
      for (std::size_t s = 0; s + 1 < seq.size(); ++s) {
        fp.plus.push_back(two(seq[s], seq[s + 1]));
        ready = std::max(ready, step_of[fp.plus.back()]);
      }
      for (std::size_t s = 1; s + 1 < seq.size(); ++s) {
        fp.minus.push_back(one(seq[s]));
        ready = std::max(ready, step_of[fp.minus.back()]);
      }
      forced_at_[ready].push_back(std::move(fp));
    }
  }

  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
  }

  // Places `value` on step `k`'s path plus every long path it completes,
  // consuming each from the remaining multiset. Rolls back on failure.
  bool place(std::size_t k, const Rat& value, std::vector<std::size_t>& placed) {
    if (!remaining_.erase_one(value)) return false;
    values_[steps_[k].path] = value;
    placed.push_back(steps_[k].path);
    for (const auto& fp : forced_at_[k]) {
      Rat v;
      for (auto p : fp.plus) v += *values_[p];
      for (auto p : fp.minus) v -= *values_[p];
      if (!remaining_.erase_one(v)) return false;
      values_[fp.path] = std::move(v);
      placed.push_back(fp.path);
    }
    return true;
  }

  void unplace(std::vector<std::size_t>& placed) {
    for (auto p : placed) {
      remaining_.insert(*values_[p]);
      values_[p].reset();
    }
    placed.clear();
  }

  bool try_value(std::size_t k, const Rat& value) {
    tick();
    std::vector<std::size_t> placed;
    if (place(k, value, placed) && descend(k + 1)) return true;
    unplace(placed);
    return false;
  }

  bool descend(std::size_t k) {
    if (k == steps_.size()) return accept();
    const Step& step = steps_[k];
    switch (step.kind) {
      case StepKind::free_value: {
        std::vector<Rat> candidates;
        for (const auto& e : remaining_.entries()) {
          if (step.not_below && e.value < *values_[*step.not_below]) continue;
          candidates.push_back(e.value);
        }
        for (const auto& v : candidates) {
          if (try_value(k, v)) return true;
        }
        return false;
      }
      case StepKind::cyclic: {
        const auto& t = step.terms;
        const Rat v = *values_[t[0]] - (*values_[t[1]] - *values_[t[2]]) - (*values_[t[3]] - *values_[t[4]]);
        return try_value(k, v);
      }
      case StepKind::last_value: {
        if (remaining_.cardinality() != 1) return false;
        const Rat v = remaining_.entries().front().value;
        return try_value(k, v);
      }
    }
    return false;
  }

  bool accept() {
    std::vector<Rat> values;
    values.reserve(values_.size());
    for (const auto& v : values_) values.push_back(*v);
    IndexedFamily f(table_->n(), table_->i(), table_->j(), std::move(values));
    if (!check_condition_a(f).holds || !check_condition_b(f).holds) return false;
    try {
      reconstruct_single(f);
    } catch (const RealizabilityViolation&) {
      return false;
    }
    result_ = std::move(f);
    return true;
  }

  std::shared_ptr<const PathTable> table_;
  RatMultiset remaining_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::optional<Rat>> values_;
  std::vector<Step> steps_;
  std::vector<std::vector<ForcedPath>> forced_at_;
  std::optional<IndexedFamily> result_;
};

}  // namespace

IndexingSearch find_indexing(const RatMultiset& y, int n, Vertex i, Vertex j, std::uint64_t budget) {
  const std::uint64_t expected = count_simple_paths(n);
  if (y.cardinality() != expected) {
    throw InvalidParameter("multiset has " + std::to_string(y.cardinality()) + " elements, K_" + std::to_string(n) +
                           " has " + std::to_string(expected) + " paths per pair");
  }
  return IndexingSearcher(y, n, i, j, budget).run();
}

SingleRealizability is_realizable_single(const RatMultiset& y, int n, std::uint64_t budget) {
  if (n < 2) throw InvalidParameter("realizability needs n >= 2");
  IndexingSearch search = find_indexing(y, n, 1, 2, budget);
  SingleRealizability out;
  out.status = search.status;
  out.nodes = search.nodes;
  if (search.status == SearchStatus::found) {
    auto rebuilt = reconstruct_single(*search.indexing);
    if (path_multiset(rebuilt.graph, 1, 2) != y) {
      throw RealizabilityViolation("witness graph does not reproduce the multiset");
    }
    out.witness = std::move(rebuilt.graph);
  }
  return out;
}

}  // namespace pathweights
