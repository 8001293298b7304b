#include "pathweights/document.hpp"

#include <algorithm>
#include <utility>

#include "pathweights/errors.hpp"

namespace pathweights {

using nlohmann::json;

namespace {

constexpr DocumentKind kAllKinds[] = {DocumentKind::graph,    DocumentKind::multiset,    DocumentKind::family,
                                      DocumentKind::indexing, DocumentKind::certificate, DocumentKind::report};

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

bool is_flat_array(const json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
}

// Two-space indentation, with arrays of scalars kept on one line.
void render(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + json(key).dump() + ": ";
      render(value, indent + 2, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat_array(j)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      render(j[k], indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

std::string emit(DocumentKind kind, json payload) {
  json doc;
  doc["kind"] = std::string(to_string(kind));
  doc["version"] = std::string(kFormatVersion);
  doc["payload"] = std::move(payload);
  std::string out;
  render(doc, 0, out);
  return out + "\n";
}

// Runs `body` on the payload of a document of the expected kind, turning
// JSON type errors and invalid contents into ParseError.
template <typename Body>
auto read_payload(std::string_view text, DocumentKind expected, Body body) {
  const json doc = parse_json(text);
  if (document_kind(text) != expected) {
    throw ParseError("expected a " + std::string(to_string(expected)) + " document, got " +
                     doc.at("kind").get<std::string>());
  }
  if (!doc.contains("payload") || !doc["payload"].is_object()) throw ParseError("document has no payload object");
  try {
    return body(doc["payload"]);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ") + std::string(to_string(expected)) + " payload: " + e.what());
  } catch (const LimitExceeded&) {
    throw;
  } catch (const InvalidParameter& e) {
    throw ParseError(std::string("invalid ") + std::string(to_string(expected)) + ": " + e.what());
  }
}

Rat rat_from(const json& j) {
  if (!j.is_string()) throw ParseError("rational values must be strings");
  return Rat::parse(j.get<std::string>());
}

json entries_json(const RatMultiset& m) {
  json out = json::array();
  for (const auto& e : m.entries()) out.push_back(json::array({e.value.str(), e.multiplicity}));
  return out;
}

RatMultiset entries_from(const json& j) {
  std::vector<MultisetEntry> entries;
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("multiset entries are [value, multiplicity] pairs");
    entries.push_back({rat_from(e[0]), e[1].get<std::uint64_t>()});
  }
  try {
    return RatMultiset::from_entries(std::move(entries));
  } catch (const InvalidParameter& err) {
    throw ParseError(err.what());
  }
}

json multiset_payload(const RatMultiset& m) {
  json p;
  p["cardinality"] = m.cardinality();
  p["entries"] = entries_json(m);
  return p;
}

RatMultiset multiset_from_payload(const json& p) {
  RatMultiset m = entries_from(p);
  if (p.contains("cardinality") && p["cardinality"].get<std::uint64_t>() != m.cardinality()) {
    throw ParseError("multiset cardinality does not match its entries");
  }
  return m;
}

json pair_json(Vertex a, Vertex b) { return json::array({a, b}); }

VertexPair pair_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("vertex pairs are two-element arrays");
  return {j[0].get<Vertex>(), j[1].get<Vertex>()};
}

EdgeValues edges_from(const json& arr) {
  EdgeValues out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 3) throw ParseError("edges are [l, m, weight] triples");
    const auto key = make_pair_key(e[0].get<Vertex>(), e[1].get<Vertex>());
    if (!out.emplace(key, rat_from(e[2])).second) throw ParseError("edge listed twice");
  }
  return out;
}

json edges_json(const EdgeValues& values) {
  json arr = json::array();
  for (const auto& [pair, w] : values) arr.push_back(json::array({pair.first, pair.second, w.str()}));
  return arr;
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::graph:
      return "graph";
    case DocumentKind::multiset:
      return "multiset";
    case DocumentKind::family:
      return "family";
    case DocumentKind::indexing:
      return "indexing";
    case DocumentKind::certificate:
      return "certificate";
    case DocumentKind::report:
      return "report";
  }
  return "unknown";
}

DocumentKind document_kind(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("document has no kind");
  }
  if (!doc.contains("version") || doc["version"] != std::string(kFormatVersion)) {
    throw ParseError("unsupported document version (expected \"" + std::string(kFormatVersion) + "\")");
  }
  const auto name = doc["kind"].get<std::string>();
  for (auto kind : kAllKinds) {
    if (to_string(kind) == name) return kind;
  }
  throw ParseError("unknown document kind '" + name + "'");
}

json graph_payload(const WeightedCompleteGraph& g) {
  json p;
  p["n"] = g.n();
  p["edges"] = edges_json(g.edge_values());
  return p;
}

WeightedCompleteGraph graph_from_payload(const json& payload) {
  try {
    return WeightedCompleteGraph::from_edge_values(payload.at("n").get<int>(), edges_from(payload.at("edges")));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed graph: ") + e.what());
  } catch (const LimitExceeded&) {
    throw;
  } catch (const InvalidParameter& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

std::string write_graph(const WeightedCompleteGraph& g) { return emit(DocumentKind::graph, graph_payload(g)); }

WeightedCompleteGraph read_graph(std::string_view text) {
  return read_payload(text, DocumentKind::graph, [](const json& p) { return graph_from_payload(p); });
}

std::string write_multiset(const RatMultiset& m) { return emit(DocumentKind::multiset, multiset_payload(m)); }

RatMultiset read_multiset(std::string_view text) {
  return read_payload(text, DocumentKind::multiset, [](const json& p) { return multiset_from_payload(p); });
}

std::string write_family(const MultisetFamily& f) {
  json sets = json::array();
  for (const auto& [l, m] : all_pairs(f.n())) {
    json entry = multiset_payload(f.at(l, m));
    entry["pair"] = pair_json(l, m);
    sets.push_back(std::move(entry));
  }
  json p;
  p["n"] = f.n();
  p["multisets"] = std::move(sets);
  return emit(DocumentKind::family, std::move(p));
}

MultisetFamily read_family(std::string_view text) {
  return read_payload(text, DocumentKind::family, [](const json& p) {
    MultisetFamily f(p.at("n").get<int>());
    std::size_t seen = 0;
    for (const auto& entry : p.at("multisets")) {
      const auto [l, m] = pair_from(entry.at("pair"));
      f.set(l, m, multiset_from_payload(entry));
      ++seen;
    }
    if (seen != all_pairs(f.n()).size()) throw ParseError("family must list every pair exactly once");
    f.require_complete();
    return f;
  });
}

std::string write_indexing(const IndexedFamily& f) {
  json paths = json::array();
  for (std::size_t k = 0; k < f.paths().size(); ++k) {
    json entry;
    entry["path"] = f.paths()[k].vertices_from(f.i());
    entry["value"] = f.values()[k].str();
    paths.push_back(std::move(entry));
  }
  json p;
  p["n"] = f.n();
  p["endpoints"] = pair_json(f.i(), f.j());
  p["paths"] = std::move(paths);
  return emit(DocumentKind::indexing, std::move(p));
}

IndexedFamily read_indexing(std::string_view text) {
  return read_payload(text, DocumentKind::indexing, [](const json& p) {
    const int n = p.at("n").get<int>();
    const auto [i, j] = pair_from(p.at("endpoints"));
    std::vector<std::pair<SimplePath, Rat>> entries;
    for (const auto& e : p.at("paths")) {
      entries.emplace_back(SimplePath::from_sequence(e.at("path").get<std::vector<Vertex>>()), rat_from(e.at("value")));
    }
    return IndexedFamily::from_path_values(n, i, j, entries);
  });
}

std::string write_certificate(const FamilyCertificate& c) {
  json triples = json::array();
  for (const auto& [t, order] : c.orders) {
    json entry;
    entry["triple"] = json::array({t.i, t.j, t.k});
    json pairs = json::array();
    for (const auto& [a, b] : order.pairs) pairs.push_back(json::array({a.str(), b.str()}));
    entry["order"] = std::move(pairs);
    if (auto part = c.partitions.find(t); part != c.partitions.end()) {
      entry["l0"] = entries_json(part->second.l0);
      json blocks = json::array();
      for (const auto& [r, block] : part->second.lr) blocks.push_back({{"r", r}, {"entries", entries_json(block)}});
      entry["lr"] = std::move(blocks);
    }
    triples.push_back(std::move(entry));
  }
  json p;
  p["n"] = c.n;
  p["pivot"] = pair_json(c.pivot.first, c.pivot.second);
  p["anchors"] = edges_json(c.anchors);
  p["triples"] = std::move(triples);
  return emit(DocumentKind::certificate, std::move(p));
}

FamilyCertificate read_certificate(std::string_view text) {
  return read_payload(text, DocumentKind::certificate, [](const json& p) {
    FamilyCertificate c;
    c.n = p.at("n").get<int>();
    c.pivot = pair_from(p.at("pivot"));
    c.anchors = edges_from(p.at("anchors"));
    for (const auto& entry : p.at("triples")) {
      const auto& t = entry.at("triple");
      if (!t.is_array() || t.size() != 3) throw ParseError("triples are three-element arrays");
      const VertexTriple key{t[0].get<Vertex>(), t[1].get<Vertex>(), t[2].get<Vertex>()};
      OrderedPairing order;
      for (const auto& pr : entry.at("order")) {
        if (!pr.is_array() || pr.size() != 2) throw ParseError("order entries are [left, right] pairs");
        order.pairs.emplace_back(rat_from(pr[0]), rat_from(pr[1]));
      }
      DifferencePartition part;
      part.context = key;
      part.l0 = entries_from(json{{"entries", entry.at("l0")}});
      for (const auto& block : entry.at("lr")) part.lr.emplace(block.at("r").get<Vertex>(), entries_from(block));
      if (!c.orders.emplace(key, std::move(order)).second) throw ParseError("triple listed twice");
      c.partitions.emplace(key, std::move(part));
    }
    return c;
  });
}

std::string write_report(const Report& r) {
  json p = r.data.is_object() ? r.data : json::object();
  p["command"] = r.command;
  p["result"] = r.result;
  return emit(DocumentKind::report, std::move(p));
}

Report read_report(std::string_view text) {
  return read_payload(text, DocumentKind::report, [](const json& p) {
    Report r;
    r.command = p.at("command").get<std::string>();
    r.result = p.at("result").get<std::string>();
    r.data = p;
    r.data.erase("command");
    r.data.erase("result");
    return r;
  });
}

}  // namespace pathweights
