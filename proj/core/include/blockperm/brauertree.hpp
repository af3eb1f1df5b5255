#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockperm/algebra.hpp"

namespace blockperm {

/// Planar tree: each vertex lists its incident edge labels in cyclic
/// (counterclockwise) order. vertices[0] lies on the rho side; the two
/// sides alternate along every edge.
struct BrauerTree {
  struct Vertex {
    int id = 0;
    std::vector<int> edge_cycle;
  };
  struct Exceptional {
    int vertex = 0;  // vertex id
    int multiplicity = 2;
  };
  std::vector<Vertex> vertices;
  std::optional<Exceptional> exceptional;

  static BrauerTree line(int edges);  // edge labels 1..edges
  static BrauerTree star(int edges, int multiplicity = 1);  // center first
  /// Random tree with edge labels 0..edges-1 and random cyclic orders.
  static BrauerTree random(int edges, Rng& rng);

  /// Throws Error unless connected, acyclic, with unique edge labels.
  void validate() const;
  /// Sorted edge labels.
  std::vector<int> edges() const;
};

/// rho(i) / sigma(i): the next edge after i around its rho-side / sigma-side
/// vertex. Keyed by position in BrauerTree::edges().
struct RhoSigma {
  std::vector<int> labels;
  std::vector<std::size_t> rho;
  std::vector<std::size_t> sigma;
  /// Vertex id owning each edge on either side.
  std::vector<int> rho_vertex;
  std::vector<int> sigma_vertex;
};
RhoSigma rho_sigma(const BrauerTree& t);

/// Orbits of a permutation given as images, each listed from its least
/// element following the permutation.
std::vector<std::vector<std::size_t>> permutation_orbits(
    const std::vector<std::size_t>& perm);

/// Loewy layers of the projective indecomposable for edge `label`
/// (top first); each layer lists edge labels, the rho branch first.
std::vector<std::vector<int>> projective_loewy(const BrauerTree& t, int label);

struct NakayamaDescriptor {
  std::size_t num_simples = 0;
  std::size_t proj_length = 0;
  std::vector<int> orbit;  // edge labels, following rho
};
/// One descriptor per rho-orbit.
std::vector<NakayamaDescriptor> end_of_U_sum(const BrauerTree& t);
FinDimAlgebra algebra_of_descriptor(const NakayamaDescriptor& d, const Field& f);
/// The symmetry criterion for cyclic Nakayama algebras.
bool descriptor_is_symmetric(const NakayamaDescriptor& d);

}  // namespace blockperm
