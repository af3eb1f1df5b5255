#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "blockperm/symchars.hpp"
#include "checks.hpp"
#include "reports.hpp"

using namespace blockperm;
using namespace blockperm::tools;

namespace {

struct Options {
  bool json_out = false;
  bool pretty = false;
  std::uint64_t seed = 1;
};

void emit(const Options& o, const json& j) {
  std::cout << (o.json_out && !o.pretty ? j.dump() : j.dump(2)) << "\n";
}

int paper_check(const Options& o, const std::string& suite, const std::vector<std::string>& ids,
                const std::string& golden, bool update_golden, bool timing) {
  std::vector<CheckReport> reports;
  std::string label = suite;
  if (ids.empty()) {
    reports = run_suite(suite, o.seed);
  } else {
    label = "selected";
    Workspace ws(o.seed);
    for (const auto& id : ids) reports.push_back(run_check(find_check(id), ws));
  }
  json j = suite_json(label, o.seed, reports, timing);
  bool pass = j["pass"].get<bool>();
  if (o.json_out || o.pretty) {
    emit(o, j);
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
      if (timing) std::cout << " (" << static_cast<long long>(r.wall_ms) << " ms)";
      std::cout << "\n";
      if (r.failure) std::cout << "  " << *r.failure << "\n";
      for (const auto& a : r.assertions)
        if (!a.pass)
          std::cout << "  " << a.name << ": computed " << a.computed.dump() << ", expected "
                    << a.expected.dump() << "\n";
    }
    std::cout << (pass ? "all checks passed" : "some checks failed") << "\n";
  }
  if (!golden.empty()) {
    const std::string text = suite_json(label, o.seed, reports, false).dump(2) + "\n";
    if (update_golden) {
      std::ofstream out(golden);
      if (!out) throw Error("cannot write " + golden);
      out << text;
    } else {
      std::ifstream in(golden);
      if (!in) throw Error("cannot read golden file " + golden);
      std::stringstream ss;
      ss << in.rdbuf();
      if (ss.str() != text) {
        std::cerr << "report differs from golden file " << golden << "\n";
        pass = false;
      }
    }
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blockperm: blocks, source permutation modules and their endomorphism algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_out, "Compact JSON output");
  app.add_flag("--pretty", o.pretty, "Indented JSON output");
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();

  std::string group, field = "2", module, tree, algebra, subgroup, suite = "all", golden;
  std::size_t block = 0;
  int n = 0;
  bool with_vertex = false, end_of_u = false, update_golden = false, timing = false;
  std::vector<std::string> ids;

  auto add_gf = [&](CLI::App* c) {
    c->add_option("--group", group, "Group spec")->required();
    c->add_option("--field", field, "Field: p or p^e")->required();
  };
  auto* blocks_cmd = app.add_subcommand("blocks", "Block decomposition of kG");
  add_gf(blocks_cmd);
  auto* decompose_cmd = app.add_subcommand("decompose", "Indecomposable summands of a module");
  add_gf(decompose_cmd);
  decompose_cmd->add_option("--module", module, "Module spec")->required();
  decompose_cmd->add_flag("--vertex", with_vertex, "Fill in vertex orders");
  auto* vertex_cmd = app.add_subcommand("vertex", "Decomposition report with vertex orders");
  add_gf(vertex_cmd);
  vertex_cmd->add_option("--module", module, "Module spec")->required();
  auto* source_cmd = app.add_subcommand("source-perm", "Source permutation module of a block");
  add_gf(source_cmd);
  source_cmd->add_option("--block", block, "Block index")->capture_default_str();
  auto* weights_cmd = app.add_subcommand("weights", "Weights grouped by subgroup class and block");
  add_gf(weights_cmd);
  auto* tree_cmd = app.add_subcommand("brauer-tree", "Brauer tree combinatorics");
  tree_cmd->add_option("--tree", tree, "line:e, star:n[:m], tree JSON or @file")->required();
  tree_cmd->add_option("--field", field, "Field for the descriptor algebras")->capture_default_str();
  tree_cmd->add_flag("--end-of-u", end_of_u, "Print the Nakayama descriptors");
  auto* selfinj_cmd = app.add_subcommand("selfinj", "Self-injectivity and symmetry of an algebra");
  selfinj_cmd->add_option("--algebra", algebra, "nakayama:n:L, matrix:n, group:<spec>, JSON or @file")
      ->required();
  selfinj_cmd->add_option("--field", field, "Field")->required();
  auto* chars_cmd = app.add_subcommand("chars", "Permutation character multiplicities for S_n");
  chars_cmd->add_option("--n", n, "Degree")->required();
  chars_cmd->add_option("--subgroup", subgroup, "sylow:p or a group spec of degree n")->required();
  auto* check_cmd = app.add_subcommand("paper-check", "Run the reproduction checks");
  check_cmd->add_option("--suite", suite, "all, cyclic, klein4, nilpotent or s7")->capture_default_str();
  check_cmd->add_option("--check", ids, "Run only these check ids");
  check_cmd->add_option("--golden", golden, "Compare the report with this file");
  check_cmd->add_flag("--update-golden", update_golden, "Rewrite the golden file instead");
  check_cmd->add_flag("--timing", timing, "Report wall times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (update_golden && golden.empty()) throw ParseError("--update-golden needs --golden");
    if (*blocks_cmd) {
      PermGroup g = parse_group(group);
      emit(o, blocks_report(block_decomposition(g, Field::parse(field), o.seed), o.seed));
    } else if (*decompose_cmd || *vertex_cmd) {
      PermGroup g = parse_group(group);
      const Field& f = Field::parse(field);
      emit(o, decomposition_report(parse_module(module, g, f, o.seed), o.seed,
                                   with_vertex || *vertex_cmd));
    } else if (*source_cmd) {
      PermGroup g = parse_group(group);
      const Field& f = Field::parse(field);
      auto blocks = block_decomposition(g, f, o.seed);
      if (block >= blocks.size()) throw ParseError("block index out of range");
      emit(o, decomposition_report(source_permutation_module(blocks[block], o.seed), o.seed, false));
    } else if (*weights_cmd) {
      emit(o, weights_report(parse_group(group), Field::parse(field), o.seed));
    } else if (*tree_cmd) {
      emit(o, tree_report(parse_tree(tree), end_of_u, Field::parse(field)));
    } else if (*selfinj_cmd) {
      const Field& f = Field::parse(field);
      emit(o, selfinj_report(parse_algebra(algebra, f), o.seed));
    } else if (*chars_cmd) {
      if (n < 1) throw ParseError("--n must be positive");
      PermGroup h;
      if (subgroup.rfind("sylow:", 0) == 0 && subgroup.find(':', 6) == std::string::npos)
        h = sylow_of_symmetric(static_cast<std::size_t>(n),
                               static_cast<unsigned>(std::stoul(subgroup.substr(6))));
      else
        h = parse_group(subgroup);
      emit(o, chars_report(n, h));
    } else if (*check_cmd) {
      return paper_check(o, suite, ids, golden, update_golden, timing);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
