#include "blockperm/vertex_weight.hpp"

#include <algorithm>

namespace blockperm {

namespace {

// conjugating matrices R_t^{-1}, R_t for a left transversal of q
struct Transversal {
  std::vector<FqMatrix> r, rinv;
};

Transversal transversal(const GModule& m, const PermGroup& q) {
  const auto& t = m.group.elements();
  CosetTable ct = left_cosets(m.group, q);
  Transversal out;
  for (auto rep : ct.reps) {
    out.r.push_back(element_matrix(m, t.elems[rep]));
    out.rinv.push_back(element_matrix(m, t.elems[t.inverse[rep]]));
  }
  return out;
}

FqMatrix apply_trace(const Transversal& tr, const FqMatrix& f) {
  FqMatrix sum(f.field(), f.rows(), f.cols());
  for (std::size_t i = 0; i < tr.r.size(); ++i) sum += tr.rinv[i] * f * tr.r[i];
  return sum;
}

std::pair<bool, std::string> relative_projectivity(const GModule& m, const PermGroup& q) {
  if (!q.is_subgroup_of(m.group)) throw NotASubgroup("is_relatively_projective");
  const unsigned p = m.field().p();
  if ((m.group.order() / q.order()) % p != 0) return {true, "index"};
  if (q.order() == 1) return {is_projective(m), "norm"};
  GModule res = restrict_module(m, q);
  HomSpace h = hom_space(res, res);
  Transversal tr = transversal(m, q);
  const std::size_t d = m.dim();
  EchelonSpace span(m.field(), d * d);
  FqMatrix id = FqMatrix::identity(m.field(), d);
  for (const auto& f : h.basis) {
    span.add(apply_trace(tr, f).data());
    if (span.contains(id.data().data())) return {true, "trace"};
  }
  return {false, "trace"};
}

constexpr std::size_t kMaxQuotientForModules = 720;

}  // namespace

FqMatrix relative_trace(const GModule& m, const PermGroup& q, const FqMatrix& f) {
  if (!q.is_subgroup_of(m.group)) throw NotASubgroup("relative_trace");
  return apply_trace(transversal(m, q), f);
}

bool is_relatively_projective(const GModule& m, const PermGroup& q) {
  return relative_projectivity(m, q).first;
}

VertexCertificate vertex(const GModule& m) {
  if (m.dim() == 0) throw Error("vertex: zero module");
  if (!algebra_shape(endomorphism_algebra(m)).is_local)
    throw Error("vertex: module is decomposable");
  VertexCertificate cert;
  const unsigned p = m.field().p();
  for (const auto& q : p_subgroups_up_to_conjugacy(m.group, p).reps) {
    auto [ok, method] = relative_projectivity(m, q);
    cert.witnesses.push_back(VertexWitness{q, ok, method});
    if (ok) {
      cert.vertex = q;
      return cert;
    }
  }
  throw Error("vertex: not projective relative to a Sylow subgroup");
}

GModule brauer_construction(const GModule& m, const PermGroup& q) {
  if (!m.has_permutation_basis()) throw Error("brauer_construction: no permutation basis");
  if (!q.is_subgroup_of(m.group)) throw NotASubgroup("brauer_construction");
  std::vector<std::uint32_t> index(m.dim(), UINT32_MAX);
  std::vector<std::string> tags;
  std::vector<std::vector<std::uint32_t>> qperm;
  for (const auto& u : q.generators()) qperm.push_back(element_permutation(m, u));
  for (std::uint32_t i = 0; i < m.dim(); ++i) {
    bool fixed = true;
    for (const auto& img : qperm) fixed = fixed && img[i] == i;
    if (fixed) {
      index[i] = static_cast<std::uint32_t>(tags.size());
      tags.push_back(m.tags[i]);
    }
  }
  PermGroup n = normalizer(m.group, q);
  std::vector<std::vector<std::uint32_t>> perms;
  for (const auto& x : n.generators()) {
    auto img = element_permutation(m, x);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < m.dim(); ++i)
      if (index[i] != UINT32_MAX) out.push_back(index[img[i]]);
    perms.push_back(std::move(out));
  }
  return permutation_gmodule(n, m.field(), std::move(perms), std::move(tags));
}

std::vector<Weight> weights(const PermGroup& g, const Field& f,
                            const std::vector<BlockData>& blocks, std::uint64_t seed) {
  const unsigned p = f.p();
  const auto& tg = g.elements();
  std::vector<Weight> out;
  for (const auto& q : p_subgroups_up_to_conjugacy(g, p).reps) {
    if (q.order() == 1) {
      for (const auto& b : blocks)
        if (defect_group(b).order() == 1) {
          Weight w{q, g, g, defect_zero_simple_dim(b), std::nullopt, true, b.index};
          out.push_back(std::move(w));
        }
      continue;
    }
    PermGroup n = normalizer(g, q);
    CosetTable ct = left_cosets(n, q);
    PermGroup nq = coset_action(n, q, ct);
    auto qblocks = block_decomposition(nq, f, seed);
    const auto& tn = n.elements();
    const auto& tq = nq.elements();
    // image in k[N/Q] of Br_Q(b) for every block of g
    std::vector<Vec> br_bar;
    for (const auto& b : blocks) {
      Vec br = brauer_hom(g, f, b.idempotent, q);
      Vec bar(tq.size(), 0);
      for (std::size_t x = 0; x < tn.size(); ++x) {
        auto c = br[tg.index_of(tn.elems[x])];
        if (!c) continue;
        std::vector<Point> img(ct.size());
        for (std::size_t r = 0; r < ct.size(); ++r)
          img[r] = ct.coset_of[tn.mul(static_cast<std::uint32_t>(x), ct.reps[r])];
        auto y = tq.index_of(Perm(img));
        bar[y] = f.add(bar[y], c);
      }
      br_bar.push_back(std::move(bar));
    }
    for (const auto& c : qblocks) {
      if (defect_group(c).order() != 1) continue;
      Weight w;
      w.subgroup = q;
      w.normalizer = n;
      w.quotient = nq;
      w.simple_dim = defect_zero_simple_dim(c);
      bool found = false;
      for (std::size_t i = 0; i < blocks.size() && !found; ++i) {
        Vec prod = group_algebra_mul(nq, f, br_bar[i], c.idempotent);
        if (std::any_of(prod.begin(), prod.end(), [](auto v) { return v != 0; })) {
          w.block_index = blocks[i].index;
          found = true;
        }
      }
      if (!found) throw Error("weights: no block of g covers a weight");
      if (nq.order() <= kMaxQuotientForModules) {
        GModule reg = regular_module(nq, f);
        GModule part = sub_gmodule(reg, row_space(group_algebra_action(reg, c.idempotent)));
        auto cf = composition_factors(part.lin, seed);
        const LinModule& x = cf.simples.front();
        GModule over_quotient = make_gmodule(nq, f, x.action);
        w.simple_is_projective = is_projective(over_quotient);
        w.simple_dim = x.dim;
        w.simple = make_gmodule(n, f, x.action);
      } else {
        w.simple_is_projective = true;
      }
      out.push_back(std::move(w));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    if (a.block_index != b.block_index) return a.block_index < b.block_index;
    return a.subgroup.order() < b.subgroup.order();
  });
  return out;
}

std::vector<Weight> weights(const PermGroup& g, const Field& f, std::uint64_t seed) {
  return weights(g, f, block_decomposition(g, f, seed), seed);
}

GModule green_correspondent(const GModule& x, const PermGroup& q, const PermGroup& g,
                            std::uint64_t seed) {
  if (!x.group.is_subgroup_of(g)) throw NotASubgroup("green_correspondent");
  if (vertex(x).vertex.order() != q.order())
    throw Error("green_correspondent: vertex of x differs from q");
  GDecomposition d = decompose(induce_module(x, g), seed);
  for (const auto& part : d.summands)
    if (vertex(part.module).vertex.order() == q.order()) return part.module;
  throw Error("green_correspondent: no summand with the given vertex");
}

}  // namespace blockperm
