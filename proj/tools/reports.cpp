#include "reports.hpp"

#include <algorithm>
#include <map>

#include "blockperm/symchars.hpp"
#include "blockperm/vertex_weight.hpp"

namespace blockperm::tools {

LabelledSimples label_simples(const LinModule& m, std::uint64_t seed) {
  LabelledSimples out{composition_factors(m, seed), {}};
  const auto& s = out.factors.simples;
  std::map<std::size_t, std::size_t> count, used;
  for (const auto& x : s) ++count[x.dim];
  for (const auto& x : s) {
    std::string l = std::to_string(x.dim);
    if (count[x.dim] > 1) l += static_cast<char>('a' + used[x.dim]++);
    out.labels.push_back(l);
  }
  return out;
}

json decomposition_report(const GModule& m, const GDecomposition& d, std::uint64_t seed,
                          bool with_vertex) {
  LabelledSimples ls = label_simples(m.lin, seed);
  struct Row {
    std::size_t dim;
    std::vector<std::vector<std::string>> loewy;
    json j;
  };
  std::vector<Row> rows;
  for (const auto& part : d.summands) {
    Row r{part.module.dim(), {}, {}};
    for (const auto& layer : radical_layers(part.module.lin, ls.factors)) {
      std::vector<std::string> names;
      for (std::size_t k = 0; k < layer.size(); ++k)
        for (std::size_t c = 0; c < layer[k]; ++c) names.push_back(ls.labels[k]);
      r.loewy.push_back(std::move(names));
    }
    r.j["dim"] = part.module.dim();
    r.j["multiplicity"] = part.multiplicity;
    r.j["vertex_order"] = with_vertex ? json(vertex(part.module).vertex.order()) : json(nullptr);
    r.j["loewy_layers"] = r.loewy;
    r.j["is_projective"] = is_projective(part.module);
    rows.push_back(std::move(r));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.dim, a.loewy) < std::tie(b.dim, b.loewy);
  });
  json simples = json::array();
  for (std::size_t k = 0; k < ls.labels.size(); ++k)
    simples.push_back({{"label", ls.labels[k]},
                       {"dim", ls.factors.simples[k].dim},
                       {"multiplicity", ls.factors.multiplicity[k]}});
  json summands = json::array();
  for (auto& r : rows) summands.push_back(std::move(r.j));
  return {{"dim", m.dim()}, {"simples", simples}, {"summands", summands}};
}

json decomposition_report(const GModule& m, std::uint64_t seed, bool with_vertex) {
  return decomposition_report(m, decompose(m, seed), seed, with_vertex);
}

json blocks_report(const std::vector<BlockData>& blocks, std::uint64_t seed) {
  json out = json::array();
  for (const auto& b : blocks) {
    const auto defect = defect_group(b).order();
    const std::size_t source_dim = defect == 1 ? defect_zero_simple_dim(b)
                                               : source_permutation_module(b, seed).dim();
    out.push_back({{"id", b.index},
                   {"dim", b.dim},
                   {"defect_order", defect},
                   {"is_principal", b.is_principal},
                   {"num_simples", num_simples(b, seed)},
                   {"source_perm_dim", source_dim}});
  }
  return out;
}

json weights_report(const PermGroup& g, const Field& f, std::uint64_t seed) {
  json out = json::array();
  const Weight* prev = nullptr;
  for (const auto& w : weights(g, f, seed)) {
    const bool same = prev && prev->block_index == w.block_index &&
                      prev->subgroup.generators() == w.subgroup.generators();
    if (same) {
      out.back()["num_weights"] = out.back()["num_weights"].get<std::size_t>() + 1;
    } else {
      out.push_back({{"q_order", w.subgroup.order()},
                     {"n_quotient_order", w.quotient.order()},
                     {"num_weights", 1},
                     {"block_id", w.block_index}});
    }
    prev = &w;
  }
  return out;
}

json chars_report(int n, const PermGroup& h) {
  json table = json::object();
  for (const auto& [l, m] : perm_character_multiplicities(n, h)) table[partition_string(l)] = m;
  json ordered = json::object();
  for (const auto& l : partitions(n)) ordered[partition_string(l)] = table[partition_string(l)];
  return {{"n", n}, {"subgroup_order", h.order()}, {"multiplicities", ordered}};
}

json tree_report(const BrauerTree& t, bool end_of_u, const Field& f) {
  t.validate();
  RhoSigma rs = rho_sigma(t);
  json rho = json::object(), sigma = json::object(), loewy = json::object();
  for (std::size_t i = 0; i < rs.labels.size(); ++i) {
    const std::string key = std::to_string(rs.labels[i]);
    rho[key] = rs.labels[rs.rho[i]];
    sigma[key] = rs.labels[rs.sigma[i]];
    loewy[key] = projective_loewy(t, rs.labels[i]);
  }
  json out = {{"tree", tree_to_json(t)}, {"rho", rho}, {"sigma", sigma}, {"loewy", loewy}};
  if (end_of_u) {
    json ds = json::array();
    for (const auto& d : end_of_U_sum(t)) {
      FinDimAlgebra a = algebra_of_descriptor(d, f);
      ds.push_back({{"num_simples", d.num_simples},
                    {"proj_length", d.proj_length},
                    {"orbit", d.orbit},
                    {"dim", a.dim()},
                    {"symmetric", descriptor_is_symmetric(d)}});
    }
    out["end_of_u"] = ds;
  }
  return out;
}

json selfinj_report(const FinDimAlgebra& a, std::uint64_t seed) {
  SymmetryWitness s = is_symmetric(a, seed);
  SelfInjectivityWitness w = is_self_injective(a, seed);
  return {{"dim", a.dim()},
          {"field", a.field().name()},
          {"self_injective", w.self_injective},
          {"nakayama", w.nakayama},
          {"weakly_symmetric", s.weakly_symmetric},
          {"symmetric", s.symmetric}};
}

}  // namespace blockperm::tools
