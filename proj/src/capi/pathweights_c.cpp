#include "pathweights/pathweights.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "pathweights/combinatorics.hpp"
#include "pathweights/document.hpp"
#include "pathweights/errors.hpp"
#include "pathweights/family.hpp"
#include "pathweights/forward.hpp"
#include "pathweights/generator.hpp"
#include "pathweights/singlepair.hpp"

namespace pw = pathweights;
using nlohmann::json;

struct pw_graph {
  pw::WeightedCompleteGraph value;
};
struct pw_multiset {
  pw::RatMultiset value;
};
struct pw_family {
  pw::MultisetFamily value;
};
struct pw_indexing {
  pw::IndexedFamily value;
};
struct pw_certificate {
  pw::FamilyCertificate value;
};

namespace {

thread_local std::string last_error;

pw_status fail(pw_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping library exceptions onto status codes.
template <typename Body>
pw_status guarded(Body body) {
  try {
    last_error.clear();
    body();
    return PW_OK;
  } catch (const pw::LimitExceeded& e) {
    return fail(PW_ERR_LIMIT, e.what());
  } catch (const pw::InvalidParameter& e) {
    return fail(PW_ERR_INVALID_PARAMETER, e.what());
  } catch (const pw::ParseError& e) {
    return fail(PW_ERR_PARSE, e.what());
  } catch (const pw::RealizabilityViolation& e) {
    return fail(PW_ERR_REALIZABILITY, e.what());
  } catch (const pw::MalformedCertificate& e) {
    return fail(PW_ERR_MALFORMED_CERTIFICATE, e.what());
  } catch (const std::exception& e) {
    return fail(PW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PW_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require_out(const void* p) {
  if (p == nullptr) throw pw::InvalidParameter("required output pointer is NULL");
}

template <typename Handle>
const Handle& deref(const Handle* h) {
  if (h == nullptr) throw pw::InvalidParameter("NULL handle");
  return *h;
}

void emit_report(char** report, const pw::Report& r) {
  if (report != nullptr) *report = copy_string(pw::write_report(r));
}

pw_outcome outcome_of(pw::SearchStatus s) {
  switch (s) {
    case pw::SearchStatus::found:
      return PW_YES;
    case pw::SearchStatus::none:
      return PW_NO;
    case pw::SearchStatus::budget_exceeded:
      return PW_BUDGET_EXCEEDED;
  }
  return PW_NO;
}

const char* result_word(pw::SearchStatus s) {
  switch (s) {
    case pw::SearchStatus::found:
      return "yes";
    case pw::SearchStatus::none:
      return "no";
    case pw::SearchStatus::budget_exceeded:
      return "budget-exceeded";
  }
  return "no";
}

}  // namespace

extern "C" {

const char* pw_version(void) { return "1.0.0"; }

const char* pw_last_error(void) { return last_error.c_str(); }

const char* pw_status_name(pw_status status) {
  switch (status) {
    case PW_OK:
      return "ok";
    case PW_ERR_INVALID_PARAMETER:
      return "invalid-parameter";
    case PW_ERR_LIMIT:
      return "limit-exceeded";
    case PW_ERR_PARSE:
      return "parse-error";
    case PW_ERR_REALIZABILITY:
      return "realizability-violation";
    case PW_ERR_MALFORMED_CERTIFICATE:
      return "malformed-certificate";
    case PW_ERR_INTERNAL:
      return "internal-error";
  }
  return "unknown";
}

void pw_string_free(char* s) { std::free(s); }

pw_status pw_count_simple_paths(int n, uint64_t* out) {
  return guarded([&] {
    require_out(out);
    *out = pw::count_simple_paths(n);
  });
}

pw_status pw_check_count_identity(int n, int* holds) {
  return guarded([&] {
    require_out(holds);
    *holds = pw::check_count_identity(n) ? 1 : 0;
  });
}

pw_status pw_document_kind(const char* text, char** kind) {
  return guarded([&] {
    require_out(text);
    require_out(kind);
    *kind = copy_string(std::string(pw::to_string(pw::document_kind(text))));
  });
}

// --- graphs

pw_status pw_graph_generate(int n, uint64_t seed, int64_t num_bound, int64_t den_bound, pw_graph** out) {
  return guarded([&] {
    require_out(out);
    *out = new pw_graph{pw::random_graph(n, seed, num_bound, den_bound)};
  });
}

pw_status pw_graph_parse(const char* text, pw_graph** out) {
  return guarded([&] {
    require_out(text);
    require_out(out);
    *out = new pw_graph{pw::read_graph(text)};
  });
}

pw_status pw_graph_write(const pw_graph* g, char** text) {
  return guarded([&] {
    require_out(text);
    *text = copy_string(pw::write_graph(deref(g).value));
  });
}

int pw_graph_vertex_count(const pw_graph* g) { return g == nullptr ? 0 : g->value.n(); }

pw_status pw_graph_weight(const pw_graph* g, int l, int m, char** weight) {
  return guarded([&] {
    require_out(weight);
    *weight = copy_string(deref(g).value.weight(l, m).str());
  });
}

void pw_graph_free(pw_graph* g) { delete g; }

// --- multisets

pw_status pw_multiset_parse(const char* text, pw_multiset** out) {
  return guarded([&] {
    require_out(text);
    require_out(out);
    *out = new pw_multiset{pw::read_multiset(text)};
  });
}

pw_status pw_multiset_write(const pw_multiset* m, char** text) {
  return guarded([&] {
    require_out(text);
    *text = copy_string(pw::write_multiset(deref(m).value));
  });
}

uint64_t pw_multiset_cardinality(const pw_multiset* m) { return m == nullptr ? 0 : m->value.cardinality(); }

void pw_multiset_free(pw_multiset* m) { delete m; }

// --- families, indexings, certificates

pw_status pw_family_parse(const char* text, pw_family** out) {
  return guarded([&] {
    require_out(text);
    require_out(out);
    *out = new pw_family{pw::read_family(text)};
  });
}

pw_status pw_family_write(const pw_family* f, char** text) {
  return guarded([&] {
    require_out(text);
    *text = copy_string(pw::write_family(deref(f).value));
  });
}

void pw_family_free(pw_family* f) { delete f; }

pw_status pw_indexing_parse(const char* text, pw_indexing** out) {
  return guarded([&] {
    require_out(text);
    require_out(out);
    *out = new pw_indexing{pw::read_indexing(text)};
  });
}

pw_status pw_indexing_write(const pw_indexing* x, char** text) {
  return guarded([&] {
    require_out(text);
    *text = copy_string(pw::write_indexing(deref(x).value));
  });
}

void pw_indexing_free(pw_indexing* x) { delete x; }

pw_status pw_certificate_parse(const char* text, pw_certificate** out) {
  return guarded([&] {
    require_out(text);
    require_out(out);
    *out = new pw_certificate{pw::read_certificate(text)};
  });
}

pw_status pw_certificate_write(const pw_certificate* c, char** text) {
  return guarded([&] {
    require_out(text);
    *text = copy_string(pw::write_certificate(deref(c).value));
  });
}

void pw_certificate_free(pw_certificate* c) { delete c; }

// --- forward direction

pw_status pw_forward(const pw_graph* g, int i, int j, pw_multiset** out) {
  return guarded([&] {
    require_out(out);
    *out = new pw_multiset{pw::path_multiset(deref(g).value, i, j)};
  });
}

pw_status pw_forward_family(const pw_graph* g, pw_family** out) {
  return guarded([&] {
    require_out(out);
    *out = new pw_family{pw::MultisetFamily::from_graph(deref(g).value)};
  });
}

pw_status pw_forward_indexing(const pw_graph* g, int i, int j, pw_indexing** out) {
  return guarded([&] {
    require_out(out);
    *out = new pw_indexing{pw::IndexedFamily::from_graph(deref(g).value, i, j)};
  });
}

pw_status pw_hmap(const pw_graph* anchors, int i, int j, pw_multiset** out) {
  return guarded([&] {
    require_out(out);
    const auto& g = deref(anchors).value;
    *out = new pw_multiset{pw::h_map(g.n(), g.edge_values(), i, j)};
  });
}

pw_status pw_certificate_anchors(const pw_certificate* c, pw_graph** out) {
  return guarded([&] {
    require_out(out);
    const auto& cert = deref(c).value;
    *out = new pw_graph{pw::WeightedCompleteGraph::from_edge_values(cert.n, cert.anchors)};
  });
}

// --- single pair

pw_status pw_check_single(const pw_indexing* x, int* holds, char** report) {
  return guarded([&] {
    require_out(holds);
    const auto& f = deref(x).value;
    const auto a = pw::check_condition_a(f);
    const auto b = pw::check_condition_b(f);
    *holds = (a.holds && b.holds) ? 1 : 0;
    pw::Report r{"check-single", *holds ? "true" : "false", json::object()};
    r.data["n"] = f.n();
    r.data["endpoints"] = {f.i(), f.j()};
    r.data["condition_a"] = a.holds;
    r.data["condition_b"] = b.holds;
    json va = json::array();
    for (const auto& p : a.violations) va.push_back(p.vertices_from(f.i()));
    json vb = json::array();
    for (const auto& t : b.violations) vb.push_back({t[0], t[1], t[2]});
    r.data["violations_a"] = std::move(va);
    r.data["violations_b"] = std::move(vb);
    emit_report(report, r);
  });
}

pw_status pw_solve_single(const pw_multiset* y, int n, uint64_t budget, pw_outcome* outcome, pw_graph** witness,
                          char** report) {
  return guarded([&] {
    require_out(outcome);
    if (witness != nullptr) *witness = nullptr;
    const auto result = pw::is_realizable_single(deref(y).value, n, budget);
    *outcome = outcome_of(result.status);
    pw::Report r{"solve-single", result_word(result.status), json::object()};
    r.data["n"] = n;
    r.data["endpoints"] = {1, 2};
    r.data["budget"] = budget;
    r.data["nodes"] = result.nodes;
    if (result.witness) {
      r.data["witness"] = pw::graph_payload(*result.witness);
      if (witness != nullptr) *witness = new pw_graph{*result.witness};
    }
    emit_report(report, r);
  });
}

// --- families

pw_status pw_certify(const pw_graph* g, int pivot_u, int pivot_v, pw_certificate** out) {
  return guarded([&] {
    require_out(out);
    *out = new pw_certificate{pw::certificate_from_graph(deref(g).value, {pivot_u, pivot_v})};
  });
}

pw_status pw_verify_certificate(const pw_family* f, const pw_certificate* c, int* valid, char** report) {
  return guarded([&] {
    require_out(valid);
    const auto verdict = pw::verify_certificate(deref(f).value, deref(c).value);
    *valid = verdict.valid ? 1 : 0;
    pw::Report r{"verify-cert", verdict.valid ? "true" : "false", json::object()};
    r.data["failed_condition"] = verdict.failed ? json(std::string(1, *verdict.failed)) : json(nullptr);
    r.data["detail"] = verdict.detail;
    emit_report(report, r);
  });
}

pw_status pw_solve_family(const pw_family* f, uint64_t budget, pw_outcome* outcome, pw_graph** witness,
                          char** report) {
  return guarded([&] {
    require_out(outcome);
    if (witness != nullptr) *witness = nullptr;
    const auto result = pw::reconstruct_family(deref(f).value, budget);
    *outcome = outcome_of(result.status);
    pw::Report r{"solve-family", result_word(result.status), json::object()};
    r.data["n"] = deref(f).value.n();
    r.data["budget"] = budget;
    r.data["nodes"] = result.nodes;
    if (result.graph) {
      r.data["witness"] = pw::graph_payload(*result.graph);
      if (witness != nullptr) *witness = new pw_graph{*result.graph};
    }
    emit_report(report, r);
  });
}

pw_status pw_verify_family(const pw_graph* g, const pw_family* f, int* holds, char** report) {
  return guarded([&] {
    require_out(holds);
    const auto& graph = deref(g).value;
    const auto& family = deref(f).value;
    json mismatches = json::array();
    if (graph.n() == family.n()) {
      for (const auto& [l, m] : pw::all_pairs(graph.n())) {
        if (pw::path_multiset(graph, l, m) != family.at(l, m)) mismatches.push_back({l, m});
      }
    }
    *holds = pw::verify_family(graph, family) ? 1 : 0;
    pw::Report r{"verify-family", *holds ? "true" : "false", json::object()};
    r.data["mismatched_pairs"] = std::move(mismatches);
    if (graph.n() != family.n()) r.data["detail"] = "graph and family have different vertex counts";
    emit_report(report, r);
  });
}

}  // extern "C"
