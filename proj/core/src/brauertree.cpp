#include "blockperm/brauertree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace blockperm {

BrauerTree BrauerTree::line(int edges) {
  if (edges < 1) throw Error("line tree needs at least one edge");
  BrauerTree t;
  for (int v = 0; v <= edges; ++v) {
    Vertex x{v, {}};
    if (v > 0) x.edge_cycle.push_back(v);
    if (v < edges) x.edge_cycle.push_back(v + 1);
    t.vertices.push_back(std::move(x));
  }
  return t;
}

BrauerTree BrauerTree::star(int edges, int multiplicity) {
  if (edges < 1) throw Error("star tree needs at least one edge");
  BrauerTree t;
  Vertex c{0, {}};
  for (int e = 1; e <= edges; ++e) c.edge_cycle.push_back(e);
  t.vertices.push_back(std::move(c));
  for (int e = 1; e <= edges; ++e) t.vertices.push_back({e, {e}});
  if (multiplicity > 1) t.exceptional = Exceptional{0, multiplicity};
  return t;
}

BrauerTree BrauerTree::random(int edges, Rng& rng) {
  if (edges < 1) throw Error("random tree needs at least one edge");
  // random recursive tree: vertex v attaches to a random earlier vertex
  BrauerTree t;
  t.vertices.push_back({0, {}});
  for (int v = 1; v <= edges; ++v) {
    const auto parent = rng() % static_cast<std::uint64_t>(v);
    const int label = v - 1;
    t.vertices.push_back({v, {label}});
    t.vertices[parent].edge_cycle.push_back(label);
  }
  for (auto& x : t.vertices)
    for (std::size_t i = x.edge_cycle.size(); i > 1; --i)
      std::swap(x.edge_cycle[i - 1], x.edge_cycle[rng() % i]);
  return t;
}

std::vector<int> BrauerTree::edges() const {
  std::vector<int> e;
  for (const auto& v : vertices)
    for (int x : v.edge_cycle) e.push_back(x);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

void BrauerTree::validate() const {
  if (vertices.empty()) throw Error("malformed tree: no vertices");
  std::map<int, std::vector<std::size_t>> ends;
  std::map<int, int> ids;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!ids.emplace(vertices[v].id, 0).second)
      throw Error("malformed tree: duplicate vertex id");
    for (int e : vertices[v].edge_cycle) ends[e].push_back(v);
  }
  for (const auto& [e, vs] : ends)
    if (vs.size() != 2 || vs[0] == vs[1])
      throw Error("malformed tree: edge " + std::to_string(e) +
                  " must join two distinct vertices");
  if (ends.empty() || vertices.size() != ends.size() + 1)
    throw Error("malformed tree: vertex count must be edge count + 1");
  // connected: union-find over edges
  std::vector<std::size_t> comp(vertices.size());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& [e, vs] : ends) {
    auto a = find(vs[0]), b = find(vs[1]);
    if (a == b) throw Error("malformed tree: cycle through edge " + std::to_string(e));
    comp[a] = b;
  }
  if (exceptional) {
    if (exceptional->multiplicity < 2)
      throw Error("malformed tree: exceptional multiplicity must be at least 2");
    if (!ids.count(exceptional->vertex))
      throw Error("malformed tree: unknown exceptional vertex");
  }
}

RhoSigma rho_sigma(const BrauerTree& t) {
  t.validate();
  RhoSigma rs;
  rs.labels = t.edges();
  const std::size_t n = rs.labels.size();
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[rs.labels[i]] = i;
  // two-colour the vertices from vertices[0]
  std::map<int, std::vector<std::size_t>> ends;
  for (std::size_t v = 0; v < t.vertices.size(); ++v)
    for (int e : t.vertices[v].edge_cycle) ends[e].push_back(v);
  std::vector<int> side(t.vertices.size(), -1);
  side[0] = 0;
  std::vector<std::size_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto v = queue[q];
    for (int e : t.vertices[v].edge_cycle)
      for (auto w : ends[e])
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        }
  }
  rs.rho.assign(n, 0);
  rs.sigma.assign(n, 0);
  rs.rho_vertex.assign(n, 0);
  rs.sigma_vertex.assign(n, 0);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    const auto& cyc = t.vertices[v].edge_cycle;
    auto& perm = side[v] == 0 ? rs.rho : rs.sigma;
    auto& owner = side[v] == 0 ? rs.rho_vertex : rs.sigma_vertex;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      perm[pos[cyc[k]]] = pos[cyc[(k + 1) % cyc.size()]];
      owner[pos[cyc[k]]] = t.vertices[v].id;
    }
  }
  // the walk around a planar tree visits every edge once
  std::vector<bool> seen(n, false);
  std::size_t x = 0, len = 0;
  do {
    seen[x] = true;
    x = rs.rho[rs.sigma[x]];
    ++len;
  } while (x != 0 && len <= n);
  if (len != n) throw Error("rho o sigma is not transitive");
  return rs;
}

std::vector<std::vector<std::size_t>> permutation_orbits(
    const std::vector<std::size_t>& perm) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orb;
    for (auto x = i; !seen[x]; x = perm[x]) {
      seen[x] = true;
      orb.push_back(x);
    }
    out.push_back(std::move(orb));
  }
  return out;
}

namespace {

std::size_t orbit_size(const std::vector<std::size_t>& perm, std::size_t i) {
  std::size_t s = 1;
  for (auto x = perm[i]; x != i; x = perm[x]) ++s;
  return s;
}

int exceptional_factor(const BrauerTree& t, int vertex_id) {
  return t.exceptional && t.exceptional->vertex == vertex_id
             ? t.exceptional->multiplicity
             : 1;
}

}  // namespace

std::vector<std::vector<int>> projective_loewy(const BrauerTree& t, int label) {
  RhoSigma rs = rho_sigma(t);
  auto it = std::find(rs.labels.begin(), rs.labels.end(), label);
  if (it == rs.labels.end()) throw Error("unknown edge " + std::to_string(label));
  const std::size_t i = static_cast<std::size_t>(it - rs.labels.begin());
  const std::size_t a = orbit_size(rs.rho, i) * exceptional_factor(t, rs.rho_vertex[i]);
  const std::size_t b = orbit_size(rs.sigma, i) * exceptional_factor(t, rs.sigma_vertex[i]);
  std::vector<std::vector<int>> layers{{label}};
  std::size_t x = i, y = i;
  for (std::size_t k = 1; k < std::max(a, b); ++k) {
    std::vector<int> layer;
    x = rs.rho[x];
    y = rs.sigma[y];
    if (k < a) layer.push_back(rs.labels[x]);
    if (k < b) layer.push_back(rs.labels[y]);
    layers.push_back(std::move(layer));
  }
  layers.push_back({label});
  return layers;
}

std::vector<NakayamaDescriptor> end_of_U_sum(const BrauerTree& t) {
  RhoSigma rs = rho_sigma(t);
  std::vector<NakayamaDescriptor> out;
  for (const auto& orb : permutation_orbits(rs.rho)) {
    NakayamaDescriptor d;
    d.num_simples = orb.size();
    d.proj_length = orb.size() * exceptional_factor(t, rs.rho_vertex[orb[0]]);
    for (auto x : orb) d.orbit.push_back(rs.labels[x]);
    out.push_back(std::move(d));
  }
  return out;
}

FinDimAlgebra algebra_of_descriptor(const NakayamaDescriptor& d, const Field& f) {
  return cyclic_nakayama(f, d.num_simples, d.proj_length);
}

bool descriptor_is_symmetric(const NakayamaDescriptor& d) {
  return d.num_simples == 1 || d.proj_length % d.num_simples == 1;
}

}  // namespace blockperm
