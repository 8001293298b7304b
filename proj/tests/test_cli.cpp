#include <doctest.h>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "pathweights/document.hpp"
#include "pathweights/generator.hpp"

using namespace pathweights;

namespace {

RatMultiset bump_smallest(const RatMultiset& y) {
  auto v = y.expanded();
  v.front() += 1;
  return RatMultiset(v);
}

}  // namespace

TEST_CASE("cli gen is deterministic and bounded") {
  const auto a = cli::run("gen --n 4 --seed 7");
  const auto b = cli::run("gen --n 4 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(read_graph(a.out) == random_graph(4, 7));
  CHECK(read_graph(cli::run("gen --n 2 --seed 5").out).n() == 2);
  const auto g = read_graph(cli::run("gen --n 5 --seed 1 --num-bound 10 --den-bound 4").out);
  for (const auto& [l, m] : all_pairs(5)) {
    CHECK(g.weight(l, m) >= Rat(-10));
    CHECK(g.weight(l, m) <= Rat(10));
    CHECK(g.weight(l, m).raw().get_den() <= 4);
  }
  CHECK(cli::run("gen --n 4 --seed 1 --num-bound 0").exit_code == 2);
  CHECK(cli::run("gen --n 1 --seed 1").exit_code == 2);
  CHECK(cli::run("gen --seed 1").exit_code == 2);
}

TEST_CASE("cli exit codes") {
  cli::Scratch dir("cli");
  const auto g4 = dir.write("g4.json", write_graph(oracle::g4()));
  const auto fwd = cli::run("forward " + g4 + " --i 1 --j 2");
  CHECK(fwd.exit_code == 0);
  CHECK(read_multiset(fwd.out) == RatMultiset({Rat(1), Rat(6), Rat(8), Rat(13), Rat(13)}));

  const auto hm = cli::run("hmap " + g4 + " --i 1 --j 2");
  CHECK(hm.exit_code == 0);
  CHECK(hm.out == fwd.out);

  const auto idx = dir.write("idx.json", cli::run("forward " + g4 + " --i 1 --j 2 --indexing").out);
  const auto ok = cli::run("check-single " + idx);
  CHECK(ok.exit_code == 0);
  CHECK(read_report(ok.out).result == "true");

  auto broken = IndexedFamily::from_graph(random_graph(5, 2), 1, 2);
  broken.set_value(SimplePath(1, {3, 4, 5}, 2), broken.value(SimplePath(1, {3, 4, 5}, 2)) + 1);
  const auto bad = cli::run("check-single " + dir.write("bad.json", write_indexing(broken)));
  CHECK(bad.exit_code == 1);
  CHECK(read_report(bad.out).result == "false");

  const auto y5 = path_multiset(random_graph(5, 3), 1, 2);
  const auto no = cli::run("solve-single " + dir.write("no.json", write_multiset(bump_smallest(y5))) + " --n 5");
  CHECK(no.exit_code == 1);
  CHECK(read_report(no.out).result == "no");
  const auto capped =
      cli::run("solve-single " + dir.path("no.json") + " --n 5 --budget 20");
  CHECK(capped.exit_code == 3);
  CHECK(read_report(capped.out).result == "budget-exceeded");
  const auto yes = cli::run("solve-single " + dir.write("yes.json", write_multiset(y5)) + " --n 5");
  CHECK(yes.exit_code == 0);
  CHECK(path_multiset(graph_from_payload(read_report(yes.out).data.at("witness")), 1, 2) == y5);

  CHECK(cli::run("forward " + dir.write("junk.json", "{]") + " --i 1 --j 2").exit_code == 2);
  CHECK(cli::run("forward " + dir.path("missing.json")).exit_code == 2);
  CHECK(cli::run("forward " + g4 + " --i 1 --j 9").exit_code == 2);
  CHECK(cli::run("check-single " + g4).exit_code == 2);
  CHECK(cli::run("solve-single " + dir.path("yes.json") + " --n 4").exit_code == 2);
  CHECK(cli::run("certify " + g4 + " --pivot 1").exit_code == 2);
  CHECK(cli::run("no-such-command").exit_code == 2);
  CHECK(cli::run("").exit_code == 2);
}

TEST_CASE("cli certificates") {
  cli::Scratch dir("cert");
  const auto g = dir.write("g.json", cli::run("gen --n 5 --seed 4").out);
  const auto fam = dir.write("fam.json", cli::run("forward " + g).out);
  const auto cert_out = cli::run("certify " + g + " --pivot 2,5");
  CHECK(cert_out.exit_code == 0);
  const auto cert = dir.write("cert.json", cert_out.out);
  CHECK(read_certificate(cert_out.out).pivot == VertexPair{2, 5});
  CHECK(cli::run("verify-cert " + fam + " " + cert).exit_code == 0);
  CHECK(cli::run("hmap " + cert + " --i 1 --j 3").out == cli::run("forward " + g + " --i 1 --j 3").out);

  auto c = read_certificate(cert_out.out);
  c.anchors[{1, 3}] += 1;
  const auto rejected = cli::run("verify-cert " + fam + " " + dir.write("bad.json", write_certificate(c)));
  CHECK(rejected.exit_code == 1);
  CHECK(read_report(rejected.out).data.at("failed_condition") == "A");

  auto malformed = read_certificate(cert_out.out);
  malformed.orders.erase({1, 2, 3});
  CHECK(cli::run("verify-cert " + fam + " " + dir.write("mal.json", write_certificate(malformed))).exit_code == 2);
}

TEST_CASE("cli pipeline closure") {
  cli::Scratch dir("pipe");
  for (int n = 4; n <= 5; ++n) {
    const auto g = dir.write("g.json", cli::run("gen --n " + std::to_string(n) + " --seed 3").out);
    const auto fam = dir.write("fam.json", cli::run("forward " + g).out);
    CHECK(cli::run("verify-family " + g + " " + fam).exit_code == 0);
    const auto solved = cli::run("solve-family " + fam);
    REQUIRE(solved.exit_code == 0);
    const auto witness = graph_from_payload(read_report(solved.out).data.at("witness"));
    const auto w = dir.write("w.json", write_graph(witness));
    CHECK(cli::run("verify-family " + w + " " + fam).exit_code == 0);
    CHECK(cli::run("verify-family " + w + " - < " + fam).exit_code == 0);

    const auto other = dir.write("o.json", cli::run("gen --n " + std::to_string(n) + " --seed 4").out);
    CHECK(cli::run("verify-family " + other + " " + fam).exit_code == 1);
  }
}
