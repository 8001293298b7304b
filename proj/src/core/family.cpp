#include "pathweights/family.hpp"

#include <algorithm>
#include <sstream>

#include "pathweights/errors.hpp"

namespace pathweights {

MultisetFamily::MultisetFamily(int n) : n_(n) {
  if (n < 2) throw InvalidParameter("a multiset family needs n >= 2");
  for (const auto& p : all_pairs(n)) sets_.emplace(p, RatMultiset{});
}

MultisetFamily MultisetFamily::from_graph(const WeightedCompleteGraph& g) {
  MultisetFamily f(g.n());
  for (const auto& [l, m] : all_pairs(g.n())) f.set(l, m, path_multiset(g, l, m));
  return f;
}

const RatMultiset& MultisetFamily::at(Vertex i, Vertex j) const {
  require_vertex(n_, i);
  require_vertex(n_, j);
  if (i == j) throw InvalidParameter("family entries are indexed by distinct vertices");
  return sets_.at(make_pair_key(i, j));
}

void MultisetFamily::set(Vertex i, Vertex j, RatMultiset m) {
  require_vertex(n_, i);
  require_vertex(n_, j);
  if (i == j) throw InvalidParameter("family entries are indexed by distinct vertices");
  sets_[make_pair_key(i, j)] = std::move(m);
}

void MultisetFamily::require_complete() const {
  const auto expected = count_simple_paths(n_);
  for (const auto& [pair, m] : sets_) {
    if (m.cardinality() != expected) {
      throw InvalidParameter("D_{" + std::to_string(pair.first) + "," + std::to_string(pair.second) + "} has " +
                             std::to_string(m.cardinality()) + " elements, expected " + std::to_string(expected));
    }
  }
}

std::vector<VertexTriple> all_ordered_triples(int n) {
  std::vector<VertexTriple> out;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = 1; j <= n; ++j) {
      for (Vertex k = 1; k <= n; ++k) {
        if (i != j && j != k && i != k) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

RatMultiset DifferencePartition::merged() const {
  RatMultiset out = l0;
  for (const auto& [r, block] : lr) {
    for (const auto& e : block.entries()) out.insert(e.value, e.multiplicity);
  }
  return out;
}

namespace {

void require_distinct(int n, Vertex i, Vertex j, Vertex k) {
  require_vertex(n, i);
  require_vertex(n, j);
  require_vertex(n, k);
  if (i == j || j == k || i == k) throw InvalidParameter("triple vertices must be distinct");
}

std::string triple_str(const VertexTriple& t) {
  std::ostringstream os;
  os << '(' << t.i << ',' << t.j << ',' << t.k << ')';
  return os.str();
}

// N_{n-1} when n >= 3, else 0; N_{n-2} likewise.
std::uint64_t count_or_zero(int n) { return n >= 2 ? count_simple_paths(n) : 0; }

// Every element equals `d` except for the stated count of its opposite.
bool has_signed_shape(const RatMultiset& block, const Rat& d, std::uint64_t positives) {
  if (d.is_zero()) return block.count(d) == block.cardinality();
  if (positives > block.cardinality()) return false;
  return block.count(d) == positives && block.count(-d) == block.cardinality() - positives;
}

}  // namespace

std::vector<std::pair<SimplePath, SimplePath>> canonical_path_bijection(int n, Vertex i, Vertex j, Vertex k) {
  require_distinct(n, i, j, k);
  std::vector<std::pair<SimplePath, SimplePath>> out;
  for (const auto& p : enumerate_paths(n, i, k)) {
    const auto seq = p.interior_from(i);
    auto at_j = std::find(seq.begin(), seq.end(), j);
    if (at_j == seq.end()) {
      out.emplace_back(p, SimplePath(j, seq, k));
      continue;
    }
    std::vector<Vertex> gamma(seq.begin(), at_j);
    std::vector<Vertex> eta(at_j + 1, seq.end());
    std::vector<Vertex> image(gamma.rbegin(), gamma.rend());
    image.push_back(i);
    image.insert(image.end(), eta.begin(), eta.end());
    out.emplace_back(p, SimplePath(j, std::move(image), k));
  }
  return out;
}

Vertex canonical_block_of(const SimplePath& path_ik, Vertex i, Vertex j, Vertex k) {
  if (make_pair_key(path_ik.first(), path_ik.last()) != make_pair_key(i, k)) {
    throw InvalidParameter("path " + path_ik.str() + " does not join the triple's outer vertices");
  }
  const auto seq = path_ik.interior_from(i);
  auto at_j = std::find(seq.begin(), seq.end(), j);
  if (at_j == seq.end()) return seq.empty() ? 0 : seq.front();
  return at_j + 1 == seq.end() ? 0 : *(at_j + 1);
}

OrderedPairing canonical_order_from_graph(const WeightedCompleteGraph& g, Vertex i, Vertex j, Vertex k) {
  OrderedPairing f;
  for (const auto& [from, to] : canonical_path_bijection(g.n(), i, j, k)) {
    f.pairs.emplace_back(path_weight(g, from), path_weight(g, to));
  }
  return f;
}

DifferencePartition canonical_partition_from_graph(const WeightedCompleteGraph& g, Vertex i, Vertex j, Vertex k) {
  DifferencePartition part;
  part.context = {i, j, k};
  for (Vertex r = 1; r <= g.n(); ++r) {
    if (r != i && r != j && r != k) part.lr.emplace(r, RatMultiset{});
  }
  for (const auto& [from, to] : canonical_path_bijection(g.n(), i, j, k)) {
    const Rat diff = path_weight(g, from) - path_weight(g, to);
    const Vertex block = canonical_block_of(from, i, j, k);
    if (block == 0) {
      part.l0.insert(diff);
    } else {
      part.lr.at(block).insert(diff);
    }
  }
  return part;
}

FamilyCertificate certificate_from_graph(const WeightedCompleteGraph& g, VertexPair pivot) {
  if (g.n() < 3) throw InvalidParameter("certificates need n >= 3");
  require_vertex(g.n(), pivot.first);
  require_vertex(g.n(), pivot.second);
  if (pivot.first == pivot.second) throw InvalidParameter("pivot vertices must differ");
  FamilyCertificate cert;
  cert.n = g.n();
  cert.anchors = g.edge_values();
  cert.pivot = make_pair_key(pivot.first, pivot.second);
  for (const auto& t : all_ordered_triples(g.n())) {
    cert.orders.emplace(t, canonical_order_from_graph(g, t.i, t.j, t.k));
    cert.partitions.emplace(t, canonical_partition_from_graph(g, t.i, t.j, t.k));
  }
  return cert;
}

void require_certificate_structure(const FamilyCertificate& cert) {
  const int n = cert.n;
  if (n < 3) throw MalformedCertificate("certificates need n >= 3");
  for (const auto& p : all_pairs(n)) {
    if (!cert.anchors.contains(p)) {
      throw MalformedCertificate("no anchor for pair {" + std::to_string(p.first) + "," + std::to_string(p.second) +
                                 "}");
    }
  }
  if (cert.anchors.size() != all_pairs(n).size()) throw MalformedCertificate("anchors outside the vertex range");
  const auto [u, v] = cert.pivot;
  if (u < 1 || v > n || u >= v) throw MalformedCertificate("pivot must be a pair of distinct vertices");

  const auto triples = all_ordered_triples(n);
  if (cert.orders.size() != triples.size() || cert.partitions.size() != triples.size()) {
    throw MalformedCertificate("certificate must list every ordered triple exactly once");
  }
  const auto paths = count_simple_paths(n);
  const auto block = count_simple_paths(n - 1);
  for (const auto& t : triples) {
    auto order = cert.orders.find(t);
    auto part = cert.partitions.find(t);
    if (order == cert.orders.end() || part == cert.partitions.end()) {
      throw MalformedCertificate("triple " + triple_str(t) + " missing");
    }
    if (order->second.pairs.size() != paths) {
      throw MalformedCertificate("reciprocal order for " + triple_str(t) + " has the wrong length");
    }
    const DifferencePartition& dp = part->second;
    if (dp.context != t) throw MalformedCertificate("partition context does not match triple " + triple_str(t));
    if (dp.l0.cardinality() != block + 1) {
      throw MalformedCertificate("block L0 of " + triple_str(t) + " must have " + std::to_string(block + 1) +
                                 " elements");
    }
    std::size_t expected_blocks = 0;
    for (Vertex r = 1; r <= n; ++r) {
      if (r == t.i || r == t.j || r == t.k) continue;
      ++expected_blocks;
      auto it = dp.lr.find(r);
      if (it == dp.lr.end()) {
        throw MalformedCertificate("block L" + std::to_string(r) + " of " + triple_str(t) + " missing");
      }
      if (it->second.cardinality() != block) {
        throw MalformedCertificate("block L" + std::to_string(r) + " of " + triple_str(t) + " must have " +
                                   std::to_string(block) + " elements");
      }
    }
    if (dp.lr.size() != expected_blocks) {
      throw MalformedCertificate("partition of " + triple_str(t) + " has unexpected blocks");
    }
  }
}

ConditionVerdict verify_condition_A(const FamilyCertificate& cert) {
  require_certificate_structure(cert);
  for (const auto& [t, order] : cert.orders) {
    const Rat& yik = cert.anchors.at(make_pair_key(t.i, t.k));
    const Rat& yjk = cert.anchors.at(make_pair_key(t.j, t.k));
    const bool paired = std::any_of(order.pairs.begin(), order.pairs.end(),
                                    [&](const auto& p) { return p.first == yik && p.second == yjk; });
    if (!paired) {
      return {false, "order for " + triple_str(t) + " does not send anchor " + yik.str() + " to " + yjk.str()};
    }
  }
  return {};
}

ConditionVerdict verify_condition_B(const MultisetFamily& family, const FamilyCertificate& cert) {
  require_certificate_structure(cert);
  if (family.n() != cert.n) throw MalformedCertificate("certificate and family disagree on n");
  const int n = cert.n;
  const std::uint64_t small = count_or_zero(n - 2);
  for (const auto& [t, order] : cert.orders) {
    const RatMultiset& dik = family.at(t.i, t.k);
    const RatMultiset& djk = family.at(t.j, t.k);
    if (order.left() != dik || order.right() != djk) {
      return {false, "order for " + triple_str(t) + " is not a bijection between D_ik and D_jk"};
    }
    const RatMultiset diff = multiset_difference(dik, djk, order);
    const DifferencePartition& dp = cert.partitions.at(t);
    if (dp.merged() != diff) {
      return {false, "blocks of " + triple_str(t) + " do not partition the difference"};
    }
    const Rat d0 = cert.anchors.at(make_pair_key(t.i, t.k)) - cert.anchors.at(make_pair_key(t.j, t.k));
    if (!has_signed_shape(dp.l0, d0, 1)) {
      return {false, "block L0 of " + triple_str(t) + " is not one " + d0.str() + " plus opposites"};
    }
    for (const auto& [r, block] : dp.lr) {
      const Rat dr = cert.anchors.at(make_pair_key(r, t.i)) - cert.anchors.at(make_pair_key(r, t.j));
      if (!has_signed_shape(block, dr, small)) {
        return {false, "block L" + std::to_string(r) + " of " + triple_str(t) + " is not " + std::to_string(small) +
                           " copies of " + dr.str() + " plus opposites"};
      }
    }
  }
  return {};
}

ConditionVerdict verify_condition_C(const MultisetFamily& family, const FamilyCertificate& cert) {
  require_certificate_structure(cert);
  if (family.n() != cert.n) throw MalformedCertificate("certificate and family disagree on n");
  const auto [u, v] = cert.pivot;
  if (family.at(u, v) != h_map(cert.n, cert.anchors, u, v)) {
    return {false, "D_{" + std::to_string(u) + "," + std::to_string(v) + "} differs from h of the anchors"};
  }
  return {};
}

CertificateVerdict verify_certificate(const MultisetFamily& family, const FamilyCertificate& cert) {
  if (auto a = verify_condition_A(cert); !a.holds) return {false, 'A', a.detail};
  if (auto b = verify_condition_B(family, cert); !b.holds) return {false, 'B', b.detail};
  if (auto c = verify_condition_C(family, cert); !c.holds) return {false, 'C', c.detail};
  return {};
}

bool verify_family(const WeightedCompleteGraph& g, const MultisetFamily& family) {
  if (g.n() != family.n()) return false;
  for (const auto& [l, m] : all_pairs(g.n())) {
    if (path_multiset(g, l, m) != family.at(l, m)) return false;
  }
  return true;
}

namespace {

struct FamilyBudgetExhausted {};

// Sum of anchors along a short path must be an element of the target multiset.
struct ShortPathConstraint {
  std::vector<std::size_t> edges;
  VertexPair target;
};

class FamilySearcher {
 public:
  FamilySearcher(const MultisetFamily& family, std::uint64_t budget)
      : family_(family), budget_(budget), pairs_(all_pairs(family.n())), anchors_(pairs_.size()) {
    std::map<VertexPair, std::size_t> index;
    for (std::size_t k = 0; k < pairs_.size(); ++k) index.emplace(pairs_[k], k);
    ready_.resize(pairs_.size());
    const int n = family.n();
    auto add = [&](std::vector<Vertex> walk) {
      ShortPathConstraint c{{}, make_pair_key(walk.front(), walk.back())};
      std::size_t last = 0;
      for (std::size_t s = 0; s + 1 < walk.size(); ++s) {
        c.edges.push_back(index.at(make_pair_key(walk[s], walk[s + 1])));
        last = std::max(last, c.edges.back());
      }
      ready_[last].push_back(std::move(c));
    };
    for (const auto& [a, b] : pairs_) {
      for (Vertex l = 1; l <= n; ++l) {
        if (l == a || l == b) continue;
        add({a, l, b});
        for (Vertex m = 1; m <= n; ++m) {
          if (m != a && m != b && m != l) add({a, l, m, b});
        }
      }
    }
  }

  FamilyReconstruction run() {
    FamilyReconstruction out;
    try {
      if (descend(0)) {
        out.status = SearchStatus::found;
        out.graph = std::move(result_);
      }
    } catch (const FamilyBudgetExhausted&) {
      out.status = SearchStatus::budget_exceeded;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  bool consistent(std::size_t k) const {
    for (const auto& c : ready_[k]) {
      Rat sum;
      for (auto e : c.edges) sum += *anchors_[e];
      if (!family_.at(c.target.first, c.target.second).contains(sum)) return false;
    }
    return true;
  }

  bool descend(std::size_t k) {
    if (k == pairs_.size()) return accept();
    const auto& [a, b] = pairs_[k];
    for (const auto& e : family_.at(a, b).entries()) {
      if (++nodes_ > budget_) throw FamilyBudgetExhausted{};
      anchors_[k] = e.value;
      if (consistent(k) && descend(k + 1)) return true;
    }
    anchors_[k].reset();
    return false;
  }

  bool accept() {
    EdgeValues y;
    for (std::size_t k = 0; k < pairs_.size(); ++k) y.emplace(pairs_[k], *anchors_[k]);
    for (const auto& [l, m] : pairs_) {
      if (h_map(family_.n(), y, l, m) != family_.at(l, m)) return false;
    }
    result_ = WeightedCompleteGraph::from_edge_values(family_.n(), y);
    return true;
  }

  const MultisetFamily& family_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexPair> pairs_;
  std::vector<std::optional<Rat>> anchors_;
  std::vector<std::vector<ShortPathConstraint>> ready_;
  std::optional<WeightedCompleteGraph> result_;
};

}  // namespace

FamilyReconstruction reconstruct_family(const MultisetFamily& family, std::uint64_t budget) {
  family.require_complete();
  FamilyReconstruction out = FamilySearcher(family, budget).run();
  if (out.graph && !verify_family(*out.graph, family)) {
    throw RealizabilityViolation("reconstructed graph does not reproduce the family");
  }
  return out;
}

}  // namespace pathweights
