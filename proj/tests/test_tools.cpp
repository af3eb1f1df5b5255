#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "checks.hpp"
#include "reports.hpp"

using namespace blockperm;
using namespace blockperm::tools;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(BLOCKPERM_CLI) + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_group("sym:5").order() == 120);
  CHECK(parse_group("alt:5").order() == 60);
  CHECK(parse_group("cyclic:7").order() == 7);
  CHECK(parse_group("klein4").order() == 4);
  CHECK(parse_group("sylow:sym:6:2").order() == 16);
  auto g = parse_group(R"j({"degree": 4, "generators": [[1, 0, 2, 3], "(1 2 3 4)"]})j");
  CHECK(g.order() == 24);
  auto round = group_from_json(group_to_json(g));
  CHECK(round.generators() == g.generators());
  CHECK_THROWS_AS(parse_group("sym:x"), ParseError);
  CHECK_THROWS_AS(parse_group("dihedral:4"), ParseError);
  CHECK_THROWS_AS(parse_group(R"j({"degree": 3, "generators": [[0, 0, 1]]})j"), ParseError);
  CHECK_THROWS_AS(parse_group("{not json"), ParseError);
}

TEST_CASE("algebra and tree dumps round trip") {
  const Field& f = Field::get(3);
  auto a = cyclic_nakayama(f, 2, 3);
  auto j = algebra_to_json(a);
  auto b = algebra_from_json(j);
  CHECK(b.dim() == a.dim());
  CHECK(b.one() == a.one());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) CHECK(a.mul(a.basis_vector(i), a.basis_vector(k)) ==
                                                    b.mul(b.basis_vector(i), b.basis_vector(k)));
  // identity recovered by solving when omitted
  j.erase("one");
  CHECK(algebra_from_json(j).one() == a.one());
  CHECK(parse_algebra("matrix:2", f).dim() == 4);
  CHECK(parse_algebra("group:cyclic:3", f).dim() == 3);
  CHECK_THROWS_AS(parse_algebra("nakayama:2", f), ParseError);

  auto t = BrauerTree::star(3, 2);
  auto u = tree_from_json(tree_to_json(t));
  CHECK(tree_to_json(u) == tree_to_json(t));
  CHECK(parse_tree("line:4").edges().size() == 4);
  CHECK_THROWS(parse_tree(R"j({"vertices": [{"id": 0, "edge_cycle": [1]}], "exceptional": null})j"));
  // reflection exchanges the two sides
  auto line = BrauerTree::line(3);
  auto rs = rho_sigma(line), rr = rho_sigma(reflected(line));
  CHECK(rs.rho == rr.sigma);
  CHECK(rs.sigma == rr.rho);
}

TEST_CASE("decomposition reports") {
  const Field& f = Field::get(3);
  auto s3 = PermGroup::symmetric(3);
  auto j = decomposition_report(regular_module(s3, f), 1, true);
  CHECK(j["dim"] == 6);
  REQUIRE(j["summands"].size() == 2);
  for (const auto& s : j["summands"]) {
    CHECK(s["dim"] == 3);
    CHECK(s["is_projective"] == true);
    CHECK(s["vertex_order"] == 1);
    CHECK(s["loewy_layers"].size() == 3);
  }
  auto nat = decomposition_report(natural_module(PermGroup::symmetric(4), Field::get(2)), 1, false);
  CHECK(nat["summands"][0]["vertex_order"].is_null());
}

TEST_CASE("suites and checks") {
  CHECK(suite_checks("all").size() == all_checks().size());
  for (const auto& name : suite_names()) CHECK(!suite_checks(name).empty());
  CHECK_THROWS_AS(suite_checks("nope"), ParseError);
  auto r = run_check(find_check("sylow-multiplicity-formula"), 1);
  CHECK(r.pass);
  CHECK(!r.to_json(false).contains("wall_ms"));
  CHECK(r.to_json(true).contains("wall_ms"));
}

TEST_CASE("cap violations are reported, not thrown") {
  const auto saved = enumeration_cap();
  set_enumeration_cap(100);
  auto r = run_check(find_check("s7-block-dimensions"), 1);
  set_enumeration_cap(saved);
  CHECK(!r.pass);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->rfind("cap:", 0) == 0);
}

TEST_CASE("command line") {
  auto blocks = run_cli("blocks --group sym:5 --field 5 --json");
  CHECK(blocks.code == 0);
  auto bj = json::parse(blocks.out);
  REQUIRE(bj.size() == 3);
  CHECK(bj[0]["dim"] == 70);
  CHECK(bj[0]["is_principal"] == true);
  CHECK(bj[0]["num_simples"] == 4);
  CHECK(bj[0]["source_perm_dim"] == 14);

  auto si = run_cli("selfinj --algebra nakayama:2:2 --field 7 --json");
  CHECK(si.code == 0);
  CHECK(json::parse(si.out)["self_injective"] == true);

  auto chars = run_cli("chars --n 7 --subgroup sylow:7 --json");
  CHECK(chars.code == 0);
  CHECK(json::parse(chars.out)["multiplicities"]["5,1,1"] == 3);

  auto w = run_cli("weights --group sym:5 --field 5 --json");
  CHECK(w.code == 0);
  auto wj = json::parse(w.out);
  CHECK(wj[0]["q_order"] == 5);
  CHECK(wj[0]["num_weights"] == 4);

  auto tree = run_cli("brauer-tree --tree line:6 --end-of-u --field 7 --json");
  CHECK(tree.code == 0);
  CHECK(json::parse(tree.out)["end_of_u"].size() == 4);

  auto dec = run_cli("source-perm --group sym:5 --field 5 --json");
  CHECK(dec.code == 0);
  CHECK(json::parse(dec.out)["dim"] == 14);

  auto vert = run_cli("vertex --group alt:4 --field 2 --module trivial --json");
  CHECK(vert.code == 0);
  CHECK(json::parse(vert.out)["summands"][0]["vertex_order"] == 4);

  CHECK(run_cli("paper-check --suite nilpotent").code == 0);
  CHECK(run_cli("paper-check --suite bogus").code == 2);
  CHECK(run_cli("blocks --group bogus:3 --field 5").code == 2);
  CHECK(run_cli("blocks --group sym:4").code == 2);
  CHECK(run_cli("blocks --group sym:4 --field 6").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--help").code == 0);
}
