#include <doctest.h>

#include "oracles.hpp"
#include "pathweights/document.hpp"
#include "pathweights/errors.hpp"
#include "pathweights/generator.hpp"

using namespace pathweights;

TEST_CASE("graph documents") {
  const auto g = random_graph(5, 1);
  const std::string text = write_graph(g);
  CHECK(document_kind(text) == DocumentKind::graph);
  CHECK(read_graph(text) == g);
  CHECK(write_graph(read_graph(text)) == text);
  CHECK(text.back() == '\n');

  const std::string two = write_graph(oracle::g4());
  CHECK(two.find("[1, 2, \"1\"]") != std::string::npos);
  CHECK(two.find("[3, 4, \"6\"]") != std::string::npos);
}

TEST_CASE("generated weights respect the bounds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_graph(5, seed);
    for (const auto& [l, m] : all_pairs(5)) {
      const Rat& w = g.weight(l, m);
      CHECK(w >= Rat(-10));
      CHECK(w <= Rat(10));
      CHECK(w.raw().get_den() <= 4);
    }
  }
  CHECK(write_graph(random_graph(4, 7)) == write_graph(random_graph(4, 7)));
  CHECK(random_graph(2, 99).n() == 2);
  const auto narrow = random_graph(6, 4, 1, 1);
  for (const auto& [l, m] : all_pairs(6)) {
    CHECK(narrow.weight(l, m).is_integer());
    CHECK(abs(narrow.weight(l, m).raw()) <= 1);
  }
  CHECK_THROWS_AS(random_graph(4, 1, 0, 4), InvalidParameter);
  CHECK_THROWS_AS(random_graph(4, 1, 3, 0), InvalidParameter);
}

TEST_CASE("multiset documents") {
  const RatMultiset m({Rat(1, 2), Rat(-3), Rat(1, 2), Rat(0)});
  const std::string text = write_multiset(m);
  CHECK(document_kind(text) == DocumentKind::multiset);
  CHECK(read_multiset(text) == m);
  CHECK(text.find("[\"1/2\", 2]") != std::string::npos);
  CHECK(read_multiset(write_multiset(RatMultiset())) == RatMultiset());
}

TEST_CASE("family, indexing and certificate documents") {
  const auto g = random_graph(4, 3);
  const auto family = MultisetFamily::from_graph(g);
  CHECK(read_family(write_family(family)) == family);

  const auto x = IndexedFamily::from_graph(g, 2, 4);
  const std::string xt = write_indexing(x);
  CHECK(document_kind(xt) == DocumentKind::indexing);
  CHECK(read_indexing(xt) == x);

  for (int n = 3; n <= 5; ++n) {
    const auto c = certificate_from_graph(random_graph(n, 8), {1, n});
    const std::string ct = write_certificate(c);
    CHECK(read_certificate(ct) == c);
    CHECK(write_certificate(read_certificate(ct)) == ct);
  }
}

TEST_CASE("report documents") {
  Report r{"solve-single", "yes", nlohmann::json::object()};
  r.data["nodes"] = 12;
  r.data["witness"] = graph_payload(oracle::g4());
  const std::string text = write_report(r);
  CHECK(document_kind(text) == DocumentKind::report);
  CHECK(read_report(text) == r);
  CHECK(graph_from_payload(read_report(text).data["witness"]) == oracle::g4());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(document_kind("not json"), ParseError);
  CHECK_THROWS_AS(document_kind(R"({"kind":"graph","version":"2","payload":{}})"), ParseError);
  CHECK_THROWS_AS(document_kind(R"({"kind":"tree","version":"1","payload":{}})"), ParseError);
  CHECK_THROWS_AS(read_graph(write_multiset(RatMultiset({Rat(1)}))), ParseError);
  CHECK_THROWS_AS(read_graph(R"({"kind":"graph","version":"1","payload":{"n":3,"edges":[[1,2,"1"]]}})"),
                  ParseError);
  CHECK_THROWS_AS(read_graph(R"({"kind":"graph","version":"1","payload":{"n":2,"edges":[[1,2,"1/0"]]}})"),
                  ParseError);
  CHECK_THROWS_AS(
      read_multiset(R"({"kind":"multiset","version":"1","payload":{"cardinality":3,"entries":[["1",2]]}})"),
      ParseError);
  CHECK_THROWS_AS(
      read_multiset(R"({"kind":"multiset","version":"1","payload":{"cardinality":2,"entries":[["2",1],["1",1]]}})"),
      ParseError);
  CHECK_THROWS_AS(read_indexing(R"({"kind":"indexing","version":"1","payload":{"n":3,"endpoints":[1,2],)"
                                R"("paths":[{"path":[1,2],"value":"1"}]}})"),
                  ParseError);
}
