#include "checks.hpp"

#include <algorithm>
#include <chrono>

#include "blockperm/symchars.hpp"
#include "blockperm/brauertree.hpp"

namespace blockperm::tools {

BlockCase::BlockCase(const std::string& group, const std::string& field, std::size_t index,
                     std::uint64_t seed)
    : g_(parse_group(group)), f_(&Field::parse(field)), index_(index), seed_(seed) {
  blocks_ = block_decomposition(g_, *f_, seed_);
  if (index_ >= blocks_.size()) throw Error("block index out of range for " + group);
}

const GModule& BlockCase::sylow_module() {
  if (!sylow_) sylow_ = block_sylow_module(block());
  return *sylow_;
}

const GDecomposition& BlockCase::sylow_decomposition() {
  if (!sylow_dec_) sylow_dec_ = decompose(sylow_module(), seed_);
  return *sylow_dec_;
}

const GModule& BlockCase::defect_module() {
  if (!defect_) defect_ = block_sylow_module(block(), defect_group(block()));
  return *defect_;
}

const GDecomposition& BlockCase::defect_decomposition() {
  if (!defect_dec_) defect_dec_ = decompose(defect_module(), seed_);
  return *defect_dec_;
}

const SourceIdempotent& BlockCase::source_idempotent() {
  if (!idem_) idem_ = blockperm::source_idempotent(block(), seed_);
  return *idem_;
}

const GModule& BlockCase::source_module() {
  if (!source_) source_ = source_permutation_module(block(), source_idempotent());
  return *source_;
}

const GDecomposition& BlockCase::source_decomposition() {
  if (!source_dec_) source_dec_ = decompose(source_module(), seed_);
  return *source_dec_;
}

const FinDimAlgebra& BlockCase::source_endomorphisms() {
  return source_decomposition().end_algebra;
}

std::vector<Weight> BlockCase::block_weights() {
  if (!weights_) weights_ = weights(g_, *f_, blocks_, seed_);
  std::vector<Weight> out;
  for (const auto& w : *weights_)
    if (w.block_index == block().index) out.push_back(w);
  return out;
}

const BrauerCorrespondent& BlockCase::correspondent() {
  if (!corr_) corr_ = brauer_correspondent(block(), seed_);
  return *corr_;
}

std::size_t BlockCase::simples() {
  if (!simples_) simples_ = num_simples(block(), seed_);
  return *simples_;
}

BlockCase& Workspace::block_case(const std::string& group, const std::string& field,
                                 std::size_t index) {
  const std::string key = group + "@" + field + "#" + std::to_string(index);
  auto it = cases_.find(key);
  if (it == cases_.end())
    it = cases_.emplace(key, std::make_unique<BlockCase>(group, field, index, seed_)).first;
  return *it->second;
}

void CheckContext::expect_eq(const std::string& name, const json& computed, const json& expected) {
  out_.push_back({name, computed == expected, computed, expected});
}

void CheckContext::expect(const std::string& name, bool pass, const json& computed,
                          const json& expected) {
  out_.push_back({name, pass, computed, expected});
}

json CheckReport::to_json(bool with_time) const {
  json a = json::array();
  for (const auto& x : assertions)
    a.push_back({{"name", x.name}, {"pass", x.pass}, {"computed", x.computed}, {"expected", x.expected}});
  json j = {{"id", id}, {"anchor", anchor}, {"group", group}, {"field", field},
            {"seed", seed}, {"pass", pass}, {"assertions", a}};
  if (failure) j["failure"] = *failure;
  if (with_time) j["wall_ms"] = wall_ms;
  return j;
}

namespace {

std::vector<std::size_t> summand_dims(const GDecomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& part : d.summands)
    for (std::size_t i = 0; i < part.multiplicity; ++i) out.push_back(part.module.dim());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> projective_dims(const GDecomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& part : d.summands)
    if (is_projective(part.module))
      for (std::size_t i = 0; i < part.multiplicity; ++i) out.push_back(part.module.dim());
  std::sort(out.begin(), out.end());
  return out;
}

json algebra_shape_key(const FinDimAlgebra& a, std::uint64_t seed) {
  return {{"dim", a.dim()},
          {"simples", algebra_shape(a, seed).simple_dims.size()},
          {"self_injective", is_self_injective(a, seed).self_injective},
          {"symmetric", is_symmetric(a, seed).symmetric}};
}

json sorted_shapes(std::vector<json> shapes) {
  std::sort(shapes.begin(), shapes.end(),
            [](const json& a, const json& b) { return a.dump() < b.dump(); });
  return shapes;
}

// shapes of the indecomposable two-sided factors
json component_shapes(const FinDimAlgebra& a, std::uint64_t seed) {
  std::vector<json> out;
  for (const auto& e : central_primitive_idempotents(a, seed))
    out.push_back(algebra_shape_key(corner(a, e.coords).algebra, seed));
  return sorted_shapes(out);
}

json shapes_of(const std::vector<FinDimAlgebra>& parts, std::uint64_t seed) {
  std::vector<json> out;
  for (const auto& p : parts) out.push_back(algebra_shape_key(p, seed));
  return sorted_shapes(out);
}

json tree_shapes(const BrauerTree& t, const Field& f, std::uint64_t seed) {
  std::vector<FinDimAlgebra> parts;
  for (const auto& d : end_of_U_sum(t)) parts.push_back(algebra_of_descriptor(d, f));
  return shapes_of(parts, seed);
}

// every iso class of `small` occurs in `big` at least as often
bool classes_contained(const GDecomposition& small, const GDecomposition& big, std::uint64_t seed) {
  for (const auto& s : small.summands) {
    bool found = false;
    for (const auto& b : big.summands)
      if (b.module.dim() == s.module.dim() && b.multiplicity >= s.multiplicity &&
          is_isomorphic(b.module, s.module, seed)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool contains_class(const GDecomposition& d, const GModule& m, std::uint64_t seed) {
  for (const auto& part : d.summands)
    if (part.module.dim() == m.dim() && is_isomorphic(part.module, m, seed)) return true;
  return false;
}

std::size_t vertex_class_count(const GDecomposition& d, std::size_t order) {
  std::size_t n = 0;
  for (const auto& part : d.summands)
    if (vertex(part.module).vertex.order() == order) ++n;
  return n;
}

std::string sym(int n) { return "sym:" + std::to_string(n); }

void check_s7_blocks(CheckContext& ctx) {
  auto& c = ctx.ws().block_case("sym:7", "7");
  std::size_t positive = 0, total = 0;
  for (const auto& b : c.blocks()) {
    total += b.dim;
    if (defect_group(b).order() > 1) ++positive;
  }
  ctx.expect_eq("blocks_with_positive_defect", positive, 1);
  ctx.expect_eq("principal_block_dim", c.block().dim, 924);
  ctx.expect_eq("principal_defect_order", defect_group(c.block()).order(), 7);
  ctx.expect_eq("total_dim", total, 5040);
}

void check_s7_sylow_summands(CheckContext& ctx) {
  auto& c = ctx.ws().block_case("sym:7", "7");
  const auto& d = c.sylow_decomposition();
  ctx.expect_eq("module_dim", c.sylow_module().dim(), 132);
  ctx.expect_eq("summand_dims", summand_dims(d), std::vector<std::size_t>{1, 1, 15, 15, 15, 15, 35, 35});
  ctx.expect_eq("iso_classes", d.summands.size(), 8);
  ctx.expect_eq("projective_summand_dims", projective_dims(d), std::vector<std::size_t>{35, 35});
}

void check_s7_hooks(CheckContext& ctx) {
  auto mult = perm_character_multiplicities(7, sylow_of_symmetric(7, 7));
  std::vector<std::int64_t> hooks, formula;
  for (int i = 0; i < 7; ++i) {
    hooks.push_back(mult.at(hook_partition(7, i)));
    formula.push_back(sylow_multiplicity(7, i));
  }
  ctx.expect_eq("hook_multiplicities", hooks, std::vector<std::int64_t>{1, 0, 3, 2, 3, 0, 1});
  ctx.expect_eq("closed_formula", formula, hooks);
}

void check_s7_sylow_end(CheckContext& ctx) {
  auto& c = ctx.ws().block_case("sym:7", "7");
  const auto& e = c.sylow_decomposition().end_algebra;
  ctx.expect_eq("end_dim", e.dim(), 24);
  ctx.expect_eq("gamma_count", gamma_count(c.block(), sylow_for(c.block())), 24);
  ctx.expect_eq("self_injective", is_self_injective(e, ctx.seed()).self_injective, false);
}

void check_s7_natural_loewy(CheckContext& ctx) {
  const Field& f = Field::get(7);
  auto m = natural_module(PermGroup::symmetric(7), f);
  auto cf = composition_factors(m.lin, ctx.seed());
  std::vector<std::size_t> layer_dims;
  std::vector<std::size_t> top, bottom;
  auto layers = radical_layers(m.lin, cf);
  for (const auto& layer : layers) {
    std::size_t d = 0;
    for (std::size_t k = 0; k < layer.size(); ++k) d += layer[k] * cf.simples[k].dim;
    layer_dims.push_back(d);
  }
  ctx.expect_eq("layer_dims", layer_dims, std::vector<std::size_t>{1, 5, 1});
  ctx.expect_eq("top_equals_socle", layers.front() == layers.back(), true);
  ctx.expect_eq("is_projective", is_projective(m), true);
}

void check_sp_source_end(CheckContext& ctx, int p) {
  auto& c = ctx.ws().block_case(sym(p), std::to_string(p));
  const auto& d = c.source_decomposition();
  const auto& e = c.source_endomorphisms();
  std::vector<FinDimAlgebra> expected(2, FinDimAlgebra::matrix_algebra(c.field(), 1));
  for (int i = 0; i < (p - 3) / 2; ++i) expected.push_back(cyclic_nakayama(c.field(), 2, 2));
  ctx.expect_eq("summand_count", summand_dims(d).size(), static_cast<std::size_t>(p - 1));
  if (p == 5) ctx.expect_eq("summand_dims", summand_dims(d), std::vector<std::size_t>{1, 1, 6, 6});
  if (p == 7)
    ctx.expect_eq("summand_dims", summand_dims(d), std::vector<std::size_t>{1, 1, 15, 15, 15, 15});
  ctx.expect_eq("end_components", component_shapes(e, ctx.seed()), shapes_of(expected, ctx.seed()));
  ctx.expect_eq("end_dim", e.dim(), static_cast<std::size_t>(2 + 4 * ((p - 3) / 2)));
  ctx.expect_eq("self_injective", is_self_injective(e, ctx.seed()).self_injective, true);
  ctx.expect_eq("symmetric", is_symmetric(e, ctx.seed()).symmetric, p == 3);
}

void check_line_tree(CheckContext& ctx, int p) {
  auto& c = ctx.ws().block_case(sym(p), std::to_string(p));
  auto t = BrauerTree::line(p - 1);
  json group_side = component_shapes(c.source_endomorphisms(), ctx.seed());
  json direct = tree_shapes(t, c.field(), ctx.seed());
  json swapped = tree_shapes(reflected(t), c.field(), ctx.seed());
  ctx.expect("tree_matches_group", group_side == direct || group_side == swapped, group_side,
             json{{"tree", direct}, {"reflected", swapped}});
}

void check_sp_defect_module(CheckContext& ctx, int p) {
  auto& c = ctx.ws().block_case(sym(p), std::to_string(p));
  const auto& d = c.defect_decomposition();
  const auto& src = c.source_decomposition();
  const auto proj = projective_dims(d);
  ctx.expect_eq("has_projective_summand", !proj.empty(), p == 7);
  // non-projective part of B tensor_P k against Bi tensor_P k
  std::size_t nonproj = 0;
  bool matched = true;
  for (const auto& part : d.summands) {
    if (is_projective(part.module)) continue;
    nonproj += part.multiplicity * part.module.dim();
    bool found = false;
    for (const auto& s : src.summands)
      if (s.multiplicity == part.multiplicity && s.module.dim() == part.module.dim() &&
          is_isomorphic(s.module, part.module, ctx.seed()))
        found = true;
    matched = matched && found;
  }
  ctx.expect("nonprojective_part_is_source_module", matched && nonproj == c.source_module().dim(),
             nonproj, c.source_module().dim());
  ctx.expect_eq("end_self_injective", is_self_injective(d.end_algebra, ctx.seed()).self_injective,
                p == 5);
}

void check_gf4_source_end(CheckContext& ctx, const std::string& group, int nakayama_factors,
                          int k_factors) {
  auto& c = ctx.ws().block_case(group, "2^2");
  const auto& e = c.source_endomorphisms();
  std::vector<FinDimAlgebra> expected(k_factors, FinDimAlgebra::matrix_algebra(c.field(), 1));
  for (int i = 0; i < nakayama_factors; ++i) expected.push_back(cyclic_nakayama(c.field(), 2, 2));
  ctx.expect_eq("end_components", component_shapes(e, ctx.seed()), shapes_of(expected, ctx.seed()));
  ctx.expect_eq("self_injective", is_self_injective(e, ctx.seed()).self_injective, true);
  if (group == "alt:5")
    ctx.expect_eq("source_module_summand_dims", summand_dims(c.source_decomposition()),
                  std::vector<std::size_t>{1, 5, 5});
}

void check_a4_p3(CheckContext& ctx) {
  auto& c = ctx.ws().block_case("alt:4", "3");
  const auto& e = c.source_endomorphisms();
  ctx.expect_eq("end_dim", e.dim(), 1);
  ctx.expect_eq("split_local", algebra_shape(e, ctx.seed()).is_split_local, true);
  const auto& p = defect_group(c.block());
  ctx.expect_eq("normalizer_is_defect_group", normalizer(c.group(), p).order(), p.order());
  ctx.expect_eq("nilpotent_hint", nilpotent_hint(c.block()), true);
}

void check_block_properties(CheckContext& ctx, const std::string& group, const std::string& field,
                            std::size_t index) {
  auto& c = ctx.ws().block_case(group, field, index);
  const auto seed = ctx.seed();
  const std::size_t p_order = defect_group(c.block()).order();
  const auto& syl = c.sylow_decomposition();
  const auto& src = c.source_decomposition();
  ctx.expect_eq("source_module_divides_sylow_module", classes_contained(src, syl, seed), true);
  const std::size_t l_corr = num_simples(c.correspondent().block, seed);
  ctx.expect_eq("vertex_p_classes_in_sylow_module", vertex_class_count(syl, p_order), l_corr);
  ctx.expect_eq("vertex_p_classes_in_source_module", vertex_class_count(src, p_order), l_corr);
  ctx.expect_eq("source_module_projective_summands", projective_dims(src).size(), 0);
  auto cf = composition_factors(c.sylow_module().lin, seed);
  auto top = radical_layers(c.source_module().lin, cf).front();
  auto soc = socle_layers(c.source_module().lin, cf).front();
  auto present = [](const std::vector<std::size_t>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto x) { return x > 0; }));
  };
  ctx.expect_eq("simples_in_top", present(top), cf.simples.size());
  ctx.expect_eq("simples_in_socle", present(soc), cf.simples.size());
  auto ws = c.block_weights();
  std::size_t in_source = 0;
  for (const auto& w : ws) {
    if (!w.simple) continue;
    if (contains_class(src, green_correspondent(*w.simple, w.subgroup, c.group(), seed), seed))
      ++in_source;
  }
  ctx.expect_eq("green_correspondents_in_source_module", in_source, ws.size());
  ctx.expect_eq("weights_equal_simples", ws.size(), c.simples());
}

void check_double_cosets(CheckContext& ctx) {
  std::vector<std::string> groups{"sym:4", "sym:5", "alt:5", "sym:6", "alt:6", "alt:7", "sym:7"};
  Rng rng(ctx.seed());
  const Field& f = Field::get(2);
  constexpr std::size_t kMaxIndex = 840;
  for (int trial = 0; trial < 15; ++trial) {
    const std::string& spec = groups[rng() % groups.size()];
    PermGroup g = parse_group(spec);
    auto random_subgroup = [&] {
      while (true) {
        std::vector<std::uint32_t> idx;
        const int gens = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < gens; ++k) idx.push_back(static_cast<std::uint32_t>(rng() % g.order()));
        PermGroup h = subgroup_generated(g, idx);
        if (g.order() / h.order() <= kMaxIndex) return h;
      }
    };
    PermGroup p = random_subgroup(), q = random_subgroup();
    const auto hom = hom_space(permutation_module(g, p, f), permutation_module(g, q, f)).dim();
    const auto dc = double_cosets(g, p, q).size();
    ctx.expect_eq("triple_" + std::to_string(trial),
                  json{{"group", spec}, {"p_order", p.order()}, {"q_order", q.order()}, {"hom_dim", hom}},
                  json{{"group", spec}, {"p_order", p.order()}, {"q_order", q.order()}, {"hom_dim", dc}});
  }
}

void check_sylow_formula(CheckContext& ctx) {
  json mismatches = json::array();
  for (int p : {2, 3, 5, 7, 11, 13})
    for (int i = 0; i < p; ++i)
      if (sylow_multiplicity(p, i) != sylow_multiplicity_brute(p, i)) mismatches.push_back({p, i});
  ctx.expect_eq("formula_matches_inner_products", mismatches, json::array());
  auto printed = sylow_multiplicity_unweighted(7, 2);
  json computed = {{"printed", printed ? json(*printed) : json(nullptr)},
                   {"corrected", sylow_multiplicity(7, 2)}};
  ctx.expect("printed_formula_discrepancy_at_7_2", !printed || *printed != sylow_multiplicity(7, 2),
             computed, json{{"corrected", 3}});
}

std::vector<CheckSpec> build_checks() {
  std::vector<CheckSpec> c;
  c.push_back({"s7-block-dimensions", "S_7 at p = 7: the unique block of positive defect has dimension 924",
               "sym:7", "7", {"s7"}, check_s7_blocks});
  c.push_back({"s7-sylow-module-summands",
               "S_7 at p = 7: B tensor_S k has eight summands, two of them projective", "sym:7", "7",
               {"s7"}, check_s7_sylow_summands});
  c.push_back({"s7-hook-multiplicities", "S_7: hook constituents of the permutation character on C_7",
               "sym:7", "-", {"s7"}, check_s7_hooks});
  c.push_back({"s7-sylow-module-endomorphisms",
               "S_7 at p = 7: End_B(B tensor_S k) has dimension 24 and is not self-injective", "sym:7",
               "7", {"s7"}, check_s7_sylow_end});
  c.push_back({"s7-natural-module-loewy", "S_7 at p = 7: the projective cover of k is uniserial 1, 5, 1",
               "sym:7", "7", {"s7"}, check_s7_natural_loewy});
  for (int p : {3, 5, 7}) {
    const std::string ps = std::to_string(p);
    std::vector<std::string> suites{p == 7 ? "s7" : "cyclic"};
    c.push_back({"sp-source-endomorphisms-p" + ps,
                 "S_" + ps + " at p = " + ps + ": End of the source permutation module is k x k times Nakayama factors",
                 sym(p), ps, suites, [p](CheckContext& x) { check_sp_source_end(x, p); }});
    c.push_back({"line-tree-agrees-p" + ps,
                 "S_" + ps + " at p = " + ps + ": the line Brauer tree predicts the same algebra factors",
                 sym(p), ps, suites, [p](CheckContext& x) { check_line_tree(x, p); }});
  }
  for (int p : {5, 7}) {
    const std::string ps = std::to_string(p);
    c.push_back({"sp-defect-module-p" + ps,
                 "S_" + ps + " at p = " + ps + ": B tensor_P k against the source permutation module",
                 sym(p), ps, {p == 7 ? "s7" : "cyclic"},
                 [p](CheckContext& x) { check_sp_defect_module(x, p); }});
  }
  c.push_back({"klein4-source-endomorphisms", "V_4 over GF(4): the source algebra end is k", "klein4",
               "2^2", {"klein4"}, [](CheckContext& x) { check_gf4_source_end(x, "klein4", 0, 1); }});
  c.push_back({"a4-gf4-source-endomorphisms", "A_4 over GF(4): End of the source permutation module is k^3",
               "alt:4", "2^2", {"klein4"}, [](CheckContext& x) { check_gf4_source_end(x, "alt:4", 0, 3); }});
  c.push_back({"a5-gf4-source-endomorphisms",
               "A_5 over GF(4): End of the source permutation module is k x N, summands 1, 5, 5", "alt:5",
               "2^2", {"klein4"}, [](CheckContext& x) { check_gf4_source_end(x, "alt:5", 1, 1); }});
  c.push_back({"a4-p3-nilpotent-source", "A_4 at p = 3: nilpotent block, End is split local of dimension 1",
               "alt:4", "3", {"nilpotent"}, check_a4_p3});
  struct Prop {
    std::string id, group, field;
    std::size_t index;
    std::string suite;
  };
  for (const auto& pr : std::vector<Prop>{{"s5-p5", "sym:5", "5", 0, "cyclic"},
                                         {"s7-p7", "sym:7", "7", 0, "s7"},
                                         {"a4-gf4", "alt:4", "2^2", 0, "klein4"},
                                         {"a5-gf4", "alt:5", "2^2", 0, "klein4"},
                                         {"a4-p3", "alt:4", "3", 0, "nilpotent"},
                                         {"s5-p2-nonprincipal", "sym:5", "2", 1, "cyclic"}}) {
    c.push_back({"block-properties-" + pr.id,
                 "summands, vertices, weights and Green correspondents of block " +
                     std::to_string(pr.index) + " of " + pr.group + " over GF(" + pr.field + ")",
                 pr.group, pr.field, {pr.suite},
                 [pr](CheckContext& x) { check_block_properties(x, pr.group, pr.field, pr.index); }});
  }
  c.push_back({"double-coset-homs", "dim Hom(k[G/P], k[G/Q]) equals the number of double cosets",
               "random", "2", {}, check_double_cosets});
  c.push_back({"sylow-multiplicity-formula",
               "hook multiplicities in the permutation character on C_p, closed form against brute force",
               "cyclic:p", "-", {}, check_sylow_formula});
  std::sort(c.begin(), c.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  return c;
}

}  // namespace

const std::vector<CheckSpec>& all_checks() {
  static const std::vector<CheckSpec> checks = build_checks();
  return checks;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "cyclic", "klein4", "nilpotent", "s7"};
  return names;
}

std::vector<const CheckSpec*> suite_checks(const std::string& suite) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ParseError("unknown suite '" + suite + "'");
  std::vector<const CheckSpec*> out;
  for (const auto& c : all_checks())
    if (suite == "all" || std::find(c.suites.begin(), c.suites.end(), suite) != c.suites.end())
      out.push_back(&c);
  return out;
}

const CheckSpec& find_check(const std::string& id) {
  for (const auto& c : all_checks())
    if (c.id == id) return c;
  throw ParseError("unknown check '" + id + "'");
}

CheckReport run_check(const CheckSpec& spec, Workspace& ws) {
  CheckReport r;
  r.id = spec.id;
  r.anchor = spec.anchor;
  r.group = spec.group;
  r.field = spec.field;
  r.seed = ws.seed();
  const auto start = std::chrono::steady_clock::now();
  CheckContext ctx(ws, r.assertions);
  try {
    spec.run(ctx);
  } catch (const CapExceeded& e) {
    r.failure = std::string("cap: ") + e.what();
  } catch (const std::exception& e) {
    r.failure = std::string("error: ") + e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.pass = !r.failure && !r.assertions.empty() &&
           std::all_of(r.assertions.begin(), r.assertions.end(), [](const Assertion& a) { return a.pass; });
  return r;
}

CheckReport run_check(const CheckSpec& spec, std::uint64_t seed) {
  Workspace ws(seed);
  return run_check(spec, ws);
}

std::vector<CheckReport> run_suite(const std::string& suite, std::uint64_t seed) {
  Workspace ws(seed);
  std::vector<CheckReport> out;
  for (const auto* c : suite_checks(suite)) out.push_back(run_check(*c, ws));
  return out;
}

json suite_json(const std::string& suite, std::uint64_t seed, const std::vector<CheckReport>& reports,
                bool with_time) {
  json checks = json::array();
  bool pass = true;
  for (const auto& r : reports) {
    checks.push_back(r.to_json(with_time));
    pass = pass && r.pass;
  }
  return {{"suite", suite}, {"seed", seed}, {"pass", pass}, {"checks", checks}};
}

}  // namespace blockperm::tools
