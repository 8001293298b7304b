#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "pathweights/family.hpp"
#include "pathweights/forward.hpp"
#include "pathweights/singlepair.hpp"

namespace pathweights {

// Documents are JSON objects {"kind": ..., "version": "1", "payload": {...}}
// written with two-space indentation and a trailing newline. Rationals are
// strings ("p" or "p/q", lowest terms); multisets are sorted [value, count]
// pairs.

inline constexpr std::string_view kFormatVersion = "1";

enum class DocumentKind { graph, multiset, family, indexing, certificate, report };

std::string_view to_string(DocumentKind kind);

/// Kind named in the header. Throws ParseError on malformed headers or an
/// unsupported version.
DocumentKind document_kind(std::string_view text);

std::string write_graph(const WeightedCompleteGraph& g);
WeightedCompleteGraph read_graph(std::string_view text);

std::string write_multiset(const RatMultiset& m);
RatMultiset read_multiset(std::string_view text);

std::string write_family(const MultisetFamily& f);
MultisetFamily read_family(std::string_view text);

std::string write_indexing(const IndexedFamily& f);
IndexedFamily read_indexing(std::string_view text);

std::string write_certificate(const FamilyCertificate& c);
FamilyCertificate read_certificate(std::string_view text);

/// Outcome of a command. `data` holds command-specific fields and is
/// merged into the payload next to "command" and "result".
struct Report {
  std::string command;
  std::string result;
  nlohmann::json data = nlohmann::json::object();

  friend bool operator==(const Report&, const Report&) = default;
};

std::string write_report(const Report& r);
Report read_report(std::string_view text);

nlohmann::json graph_payload(const WeightedCompleteGraph& g);
WeightedCompleteGraph graph_from_payload(const nlohmann::json& payload);

}  // namespace pathweights
