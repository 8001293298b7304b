// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success / true / yes, 1 false / no, 2 usage or parse
// error, 3 search budget exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "pathweights/pathweights.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError {
  std::string message;
};

// Error from a C API call; carries the library message.
struct ApiError {
  pw_status status;
  std::string message;
};

void check(pw_status s) {
  if (s != PW_OK) throw ApiError{s, pw_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Graph = std::unique_ptr<pw_graph, Deleter<pw_graph, pw_graph_free>>;
using Multiset = std::unique_ptr<pw_multiset, Deleter<pw_multiset, pw_multiset_free>>;
using Family = std::unique_ptr<pw_family, Deleter<pw_family, pw_family_free>>;
using Indexing = std::unique_ptr<pw_indexing, Deleter<pw_indexing, pw_indexing_free>>;
using Certificate = std::unique_ptr<pw_certificate, Deleter<pw_certificate, pw_certificate_free>>;
using OwnedString = std::unique_ptr<char, Deleter<char, pw_string_free>>;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void print(char* raw) {
  OwnedString s(raw);
  std::cout << s.get();
}

std::string kind_of(const std::string& text) {
  char* raw = nullptr;
  check(pw_document_kind(text.c_str(), &raw));
  OwnedString s(raw);
  return s.get();
}

Graph load_graph(const std::string& path) {
  pw_graph* g = nullptr;
  check(pw_graph_parse(read_input(path).c_str(), &g));
  return Graph(g);
}

Family load_family(const std::string& path) {
  pw_family* f = nullptr;
  check(pw_family_parse(read_input(path).c_str(), &f));
  return Family(f);
}

int exit_for(pw_outcome o) {
  switch (o) {
    case PW_YES:
      return kExitOk;
    case PW_NO:
      return kExitNo;
    case PW_BUDGET_EXCEEDED:
      return kExitBudget;
  }
  return kExitNo;
}

struct Options {
  int n = 0;
  std::uint64_t seed = 0;
  int i = 0;
  int j = 0;
  std::uint64_t budget = PW_DEFAULT_BUDGET;
  std::int64_t num_bound = 10;
  std::int64_t den_bound = 4;
  std::string pivot = "1,2";
  bool indexing = false;
  std::string first;
  std::string second;
};

std::pair<int, int> parse_pivot(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError{"--pivot expects u,v"};
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError{"--pivot expects u,v"};
  }
}

int cmd_gen(const Options& o) {
  pw_graph* raw = nullptr;
  check(pw_graph_generate(o.n, o.seed, o.num_bound, o.den_bound, &raw));
  Graph g(raw);
  char* text = nullptr;
  check(pw_graph_write(g.get(), &text));
  print(text);
  return kExitOk;
}

int cmd_forward(const Options& o, bool endpoints_given) {
  Graph g = load_graph(o.first);
  char* text = nullptr;
  if (!endpoints_given) {
    if (o.indexing) throw UsageError{"--indexing needs --i and --j"};
    pw_family* f = nullptr;
    check(pw_forward_family(g.get(), &f));
    Family family(f);
    check(pw_family_write(family.get(), &text));
  } else if (o.indexing) {
    pw_indexing* x = nullptr;
    check(pw_forward_indexing(g.get(), o.i, o.j, &x));
    Indexing indexing(x);
    check(pw_indexing_write(indexing.get(), &text));
  } else {
    pw_multiset* m = nullptr;
    check(pw_forward(g.get(), o.i, o.j, &m));
    Multiset ms(m);
    check(pw_multiset_write(ms.get(), &text));
  }
  print(text);
  return kExitOk;
}

int cmd_hmap(const Options& o) {
  const std::string text = read_input(o.first);
  const std::string kind = kind_of(text);
  Graph anchors;
  if (kind == "graph") {
    pw_graph* g = nullptr;
    check(pw_graph_parse(text.c_str(), &g));
    anchors.reset(g);
  } else if (kind == "certificate") {
    pw_certificate* c = nullptr;
    check(pw_certificate_parse(text.c_str(), &c));
    Certificate cert(c);
    pw_graph* g = nullptr;
    check(pw_certificate_anchors(cert.get(), &g));
    anchors.reset(g);
  } else {
    throw UsageError{"hmap expects a graph or certificate document, got " + kind};
  }
  pw_multiset* m = nullptr;
  check(pw_hmap(anchors.get(), o.i, o.j, &m));
  Multiset ms(m);
  char* out = nullptr;
  check(pw_multiset_write(ms.get(), &out));
  print(out);
  return kExitOk;
}

int cmd_check_single(const Options& o) {
  pw_indexing* x = nullptr;
  check(pw_indexing_parse(read_input(o.first).c_str(), &x));
  Indexing indexing(x);
  int holds = 0;
  char* report = nullptr;
  check(pw_check_single(indexing.get(), &holds, &report));
  print(report);
  return holds ? kExitOk : kExitNo;
}

int cmd_solve_single(const Options& o) {
  pw_multiset* m = nullptr;
  check(pw_multiset_parse(read_input(o.first).c_str(), &m));
  Multiset ms(m);
  pw_outcome outcome = PW_NO;
  char* report = nullptr;
  check(pw_solve_single(ms.get(), o.n, o.budget, &outcome, nullptr, &report));
  print(report);
  return exit_for(outcome);
}

int cmd_certify(const Options& o) {
  Graph g = load_graph(o.first);
  const auto [u, v] = parse_pivot(o.pivot);
  pw_certificate* c = nullptr;
  check(pw_certify(g.get(), u, v, &c));
  Certificate cert(c);
  char* text = nullptr;
  check(pw_certificate_write(cert.get(), &text));
  print(text);
  return kExitOk;
}

int cmd_verify_cert(const Options& o) {
  Family family = load_family(o.first);
  pw_certificate* c = nullptr;
  check(pw_certificate_parse(read_input(o.second).c_str(), &c));
  Certificate cert(c);
  int valid = 0;
  char* report = nullptr;
  check(pw_verify_certificate(family.get(), cert.get(), &valid, &report));
  print(report);
  return valid ? kExitOk : kExitNo;
}

int cmd_solve_family(const Options& o) {
  Family family = load_family(o.first);
  pw_outcome outcome = PW_NO;
  char* report = nullptr;
  check(pw_solve_family(family.get(), o.budget, &outcome, nullptr, &report));
  print(report);
  return exit_for(outcome);
}

int cmd_verify_family(const Options& o) {
  Graph g = load_graph(o.first);
  Family family = load_family(o.second);
  int holds = 0;
  char* report = nullptr;
  check(pw_verify_family(g.get(), family.get(), &holds, &report));
  print(report);
  return holds ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple-path weight multisets of weighted complete graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a seeded random weighted complete graph");
  gen->add_option("--n", o.n, "Number of vertices")->required();
  gen->add_option("--seed", o.seed, "mt19937_64 seed")->required();
  gen->add_option("--num-bound", o.num_bound, "Largest |numerator| of an edge weight");
  gen->add_option("--den-bound", o.den_bound, "Largest denominator of an edge weight");

  auto* forward = app.add_subcommand("forward", "Path-weight multiset D_ij of a graph (all pairs without --i/--j)");
  forward->add_option("graph", o.first, "Graph document ('-' for stdin)")->required();
  auto* fi = forward->add_option("--i", o.i, "First endpoint");
  auto* fj = forward->add_option("--j", o.j, "Second endpoint");
  fi->needs(fj);
  fj->needs(fi);
  forward->add_flag("--indexing", o.indexing, "Emit the per-path indexing instead of the multiset");

  auto* hmap = app.add_subcommand("hmap", "h_ij of the edge values in a graph or certificate");
  hmap->add_option("document", o.first, "Graph or certificate document")->required();
  hmap->add_option("--i", o.i)->required();
  hmap->add_option("--j", o.j)->required();

  auto* check_single = app.add_subcommand("check-single", "Check both single-pair conditions on an indexing");
  check_single->add_option("indexing", o.first, "Indexing document")->required();

  auto* solve_single = app.add_subcommand("solve-single", "Decide whether a multiset is D_12 of some K_n");
  solve_single->add_option("multiset", o.first, "Multiset document")->required();
  solve_single->add_option("--n", o.n, "Number of vertices")->required();
  solve_single->add_option("--budget", o.budget, "Search node limit");

  auto* certify = app.add_subcommand("certify", "Emit the canonical certificate of a graph");
  certify->add_option("graph", o.first, "Graph document")->required();
  certify->add_option("--pivot", o.pivot, "Pivot pair u,v");

  auto* verify_cert = app.add_subcommand("verify-cert", "Check a certificate against a family");
  verify_cert->add_option("family", o.first, "Family document")->required();
  verify_cert->add_option("certificate", o.second, "Certificate document")->required();

  auto* solve_family = app.add_subcommand("solve-family", "Reconstruct a graph realizing a family");
  solve_family->add_option("family", o.first, "Family document")->required();
  solve_family->add_option("--budget", o.budget, "Search node limit");

  auto* verify_family = app.add_subcommand("verify-family", "Check that a graph realizes a family");
  verify_family->add_option("graph", o.first, "Graph document")->required();
  verify_family->add_option("family", o.second, "Family document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (forward->parsed()) return cmd_forward(o, fi->count() > 0);
    if (hmap->parsed()) return cmd_hmap(o);
    if (check_single->parsed()) return cmd_check_single(o);
    if (solve_single->parsed()) return cmd_solve_single(o);
    if (certify->parsed()) return cmd_certify(o);
    if (verify_cert->parsed()) return cmd_verify_cert(o);
    if (solve_family->parsed()) return cmd_solve_family(o);
    if (verify_family->parsed()) return cmd_verify_family(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error (" << pw_status_name(e.status) << "): " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
