#include "parse.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "blockperm/blocks.hpp"

namespace blockperm::tools {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long long to_int(std::string_view s, std::string_view what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
    throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("malformed " + std::string(what) + " JSON: " + e.what());
  }
}

}  // namespace

std::string read_spec(std::string_view spec) {
  if (spec.empty() || spec[0] != '@') return std::string(spec);
  std::ifstream in{std::string(spec.substr(1))};
  if (!in) throw ParseError("cannot read " + std::string(spec.substr(1)));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PermGroup group_from_json(const json& j) {
  try {
    const auto degree = j.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto& g : j.at("generators")) {
      if (g.is_string()) {
        gens.push_back(Perm::parse_cycles(degree, g.get<std::string>()));
      } else {
        auto img = g.get<std::vector<Point>>();
        std::vector<bool> seen(degree, false);
        if (img.size() != degree) throw ParseError("generator length differs from degree");
        for (auto x : img) {
          if (x >= degree || seen[x]) throw ParseError("generator is not a permutation");
          seen[x] = true;
        }
        gens.emplace_back(std::move(img));
      }
    }
    return PermGroup(degree, std::move(gens));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad group JSON: ") + e.what());
  }
}

json group_to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(x.images());
  return {{"degree", g.degree()}, {"generators", gens}};
}

PermGroup parse_group(std::string_view spec_in) {
  const std::string spec = read_spec(spec_in);
  if (!spec.empty() && spec[0] == '{') return group_from_json(parse_json(spec, "group"));
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "klein4" && parts.size() == 1) return PermGroup::klein4();
  if (parts.size() == 2) {
    const auto n = static_cast<std::size_t>(to_int(parts[1], "group degree"));
    if (kind == "sym") return PermGroup::symmetric(n);
    if (kind == "alt") return PermGroup::alternating(n);
    if (kind == "cyclic") return PermGroup::cyclic(n);
    if (kind == "trivial") return PermGroup::trivial(n);
  }
  if (kind == "sylow" && parts.size() == 4 && parts[1] == "sym")
    return sylow_of_symmetric(static_cast<std::size_t>(to_int(parts[2], "degree")),
                              static_cast<unsigned>(to_int(parts[3], "prime")));
  throw ParseError("unknown group spec '" + spec + "'");
}

GModule parse_module(std::string_view spec, const PermGroup& g, const Field& f,
                     std::uint64_t seed) {
  const std::string s(spec);
  if (s == "natural") return natural_module(g, f);
  if (s == "regular") return regular_module(g, f);
  if (s == "trivial") return trivial_module(g, f);
  if (s == "sylow") return permutation_module(g, sylow_subgroup(g, f.p()), f);
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("unknown module spec '" + s + "'");
  const std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
  if (kind == "perm") return permutation_module(g, parse_group(rest), f);
  auto blocks = block_decomposition(g, f, seed);
  const auto i = static_cast<std::size_t>(to_int(rest, "block index"));
  if (i >= blocks.size()) throw ParseError("block index out of range: " + rest);
  if (kind == "block-sylow") return block_sylow_module(blocks[i]);
  if (kind == "block-defect") return block_sylow_module(blocks[i], defect_group(blocks[i]));
  if (kind == "source") return source_permutation_module(blocks[i], seed);
  throw ParseError("unknown module spec '" + s + "'");
}

json algebra_to_json(const FinDimAlgebra& a) {
  json constants = json::array();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (auto c = a.c(i, j, k)) constants.push_back({i, j, k, c});
  return {{"dim", n},
          {"field", a.field().name()},
          {"constants", constants},
          {"labels", a.labels()},
          {"one", a.one()}};
}

FinDimAlgebra algebra_from_json(const json& j, const Field* f) {
  try {
    const Field& field = f ? *f : Field::parse(j.at("field").get<std::string>());
    if (f && j.contains("field") && Field::parse(j["field"].get<std::string>()).q() != f->q())
      throw ParseError("algebra field differs from --field");
    const auto n = j.at("dim").get<std::size_t>();
    std::vector<Field::Elem> mult(n * n * n, 0);
    for (const auto& t : j.at("constants")) {
      auto v = t.get<std::vector<long long>>();
      if (v.size() != 4) throw ParseError("structure constant triples need 4 entries");
      for (int k = 0; k < 3; ++k)
        if (v[k] < 0 || static_cast<std::size_t>(v[k]) >= n) throw ParseError("basis index out of range");
      if (v[3] < 0 || v[3] >= static_cast<long long>(field.q())) throw ParseError("coefficient out of range");
      mult[(v[0] * n + v[1]) * n + v[2]] = static_cast<Field::Elem>(v[3]);
    }
    Vec one;
    if (j.contains("one")) {
      one = j["one"].get<Vec>();
      if (one.size() != n) throw ParseError("identity has the wrong length");
    } else {
      // solve e b_j = b_j = b_j e for all j
      FqMatrix a(field, n, 2 * n * n), rhs(field, 1, 2 * n * n);
      for (std::size_t jj = 0; jj < n; ++jj)
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t c = jj * n + k;
          for (std::size_t i = 0; i < n; ++i) {
            a(i, c) = mult[(i * n + jj) * n + k];
            a(i, n * n + c) = mult[(jj * n + i) * n + k];
          }
          if (jj == k) rhs(0, c) = rhs(0, n * n + c) = 1;
        }
      auto sol = solve_left(a, rhs);
      if (!sol) throw ParseError("algebra has no identity");
      one.assign(sol->row(0), sol->row(0) + n);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return FinDimAlgebra(field, n, std::move(mult), std::move(one), std::move(labels));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad algebra JSON: ") + e.what());
  }
}

FinDimAlgebra parse_algebra(std::string_view spec_in, const Field& f) {
  const std::string spec = read_spec(spec_in);
  if (!spec.empty() && spec[0] == '{') return algebra_from_json(parse_json(spec, "algebra"), &f);
  auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "group") return group_algebra(parse_group(rest), f);
  auto parts = split(rest, ':');
  if (kind == "nakayama" && parts.size() == 2)
    return cyclic_nakayama(f, static_cast<std::size_t>(to_int(parts[0], "vertex count")),
                           static_cast<std::size_t>(to_int(parts[1], "length")));
  if (kind == "matrix" && parts.size() == 1)
    return FinDimAlgebra::matrix_algebra(f, static_cast<std::size_t>(to_int(parts[0], "size")));
  throw ParseError("unknown algebra spec '" + spec + "'");
}

BrauerTree tree_from_json(const json& j) {
  try {
    BrauerTree t;
    for (const auto& v : j.at("vertices"))
      t.vertices.push_back({v.at("id").get<int>(), v.at("edge_cycle").get<std::vector<int>>()});
    if (j.contains("exceptional") && !j["exceptional"].is_null())
      t.exceptional = BrauerTree::Exceptional{j["exceptional"].at("vertex").get<int>(),
                                              j["exceptional"].at("m").get<int>()};
    t.validate();
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad tree JSON: ") + e.what());
  }
}

json tree_to_json(const BrauerTree& t) {
  json vs = json::array();
  for (const auto& v : t.vertices) vs.push_back({{"id", v.id}, {"edge_cycle", v.edge_cycle}});
  json ex = nullptr;
  if (t.exceptional) ex = {{"vertex", t.exceptional->vertex}, {"m", t.exceptional->multiplicity}};
  return {{"vertices", vs}, {"exceptional", ex}};
}

BrauerTree parse_tree(std::string_view spec_in) {
  const std::string spec = read_spec(spec_in);
  if (!spec.empty() && spec[0] == '{') return tree_from_json(parse_json(spec, "tree"));
  auto parts = split(spec, ':');
  if (parts[0] == "line" && parts.size() == 2)
    return BrauerTree::line(static_cast<int>(to_int(parts[1], "edge count")));
  if (parts[0] == "star" && (parts.size() == 2 || parts.size() == 3))
    return BrauerTree::star(static_cast<int>(to_int(parts[1], "edge count")),
                            parts.size() == 3 ? static_cast<int>(to_int(parts[2], "multiplicity")) : 1);
  throw ParseError("unknown tree spec '" + spec + "'");
}

BrauerTree reflected(const BrauerTree& t) {
  BrauerTree out = t;
  if (t.vertices.size() < 2) return out;
  const std::set<int> first(t.vertices[0].edge_cycle.begin(), t.vertices[0].edge_cycle.end());
  for (std::size_t i = 1; i < t.vertices.size(); ++i)
    for (int e : t.vertices[i].edge_cycle)
      if (first.count(e)) {
        std::swap(out.vertices[0], out.vertices[i]);
        return out;
      }
  return out;
}

}  // namespace blockperm::tools
