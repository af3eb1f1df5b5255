#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "blockperm/error.hpp"

namespace blockperm {

using Point = std::uint32_t;

/// Permutation of {0, ..., degree-1}; (a * b)[i] = a[b[i]], so b acts first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  /// Cycles given with 0-based points.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);
  /// Parses "(1 2 3)(4 5)"; points are 1-based unless one_based is false.
  static Perm parse_cycles(std::size_t degree, std::string_view s,
                           bool one_based = true);

  std::size_t degree() const { return img_.size(); }
  Point operator[](std::size_t i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  Perm operator*(const Perm& b) const;
  Perm inverse() const;
  Perm pow(long long n) const;
  bool is_identity() const;
  std::uint64_t order() const;
  /// Cycle lengths in decreasing order, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  std::string cycle_string(bool one_based = true) const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Element-materialization cap (default 10080, overridable through the
/// BLOCKPERM_CAP environment variable or set_enumeration_cap).
std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);

/// Materialized element list of a group: sorted lexicographically, with
/// lookup, inverses and a breadth-first word tree over the generators.
struct ElementTable {
  std::vector<Perm> elems;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<std::uint32_t> inverse;
  /// parent[i] and gen[i]: elems[i] = gens[gen[i]] * elems[parent[i]];
  /// the identity has parent == itself.
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> gen;
  /// Elements in breadth-first order (parents precede children).
  std::vector<std::uint32_t> bfs_order;
  std::uint32_t identity = 0;

  std::size_t size() const { return elems.size(); }
  std::uint32_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index.count(p) != 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return index_of(elems[a] * elems[b]);
  }
};

struct ConjugacyClasses {
  /// Representative = lexicographically least member.
  std::vector<std::uint32_t> reps;
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<std::uint32_t> class_of;
};

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup cyclic(std::size_t n);
  static PermGroup trivial(std::size_t degree);
  static PermGroup klein4();

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& g) const;
  bool is_trivial() const { return order() == 1; }
  bool is_p_group(unsigned p) const;
  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;

  /// Throws CapExceeded beyond enumeration_cap().
  const ElementTable& elements() const;
  const ConjugacyClasses& conjugacy_classes() const;

  /// Base points of the stabilizer chain and the basic orbit sizes.
  std::vector<Point> base() const;
  std::vector<std::size_t> basic_orbit_sizes() const;

 private:
  struct Chain;
  struct Cache {
    std::once_flag chain_once, elems_once, classes_once;
    std::shared_ptr<Chain> chain;
    std::unique_ptr<ElementTable> elems;
    std::unique_ptr<ConjugacyClasses> classes;
  };
  const Chain& chain() const;

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Sorted indices (in g's element table) of the elements of h.
std::vector<std::uint32_t> element_indices(const PermGroup& g,
                                           const PermGroup& h);
/// Subgroup of g generated by the listed elements (indices into g), with a
/// small generating set chosen greedily in index order.
PermGroup subgroup_generated(const PermGroup& g,
                             const std::vector<std::uint32_t>& idx);
/// Subgroup of g whose element set is exactly idx (must be closed).
PermGroup subgroup_from_elements(const PermGroup& g,
                                 const std::vector<std::uint32_t>& idx);

PermGroup sylow_of_symmetric(std::size_t n, unsigned p);
/// Some Sylow p-subgroup of g (within the cap).
PermGroup sylow_subgroup(const PermGroup& g, unsigned p);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);
PermGroup centralizer(const PermGroup& g, const PermGroup& h);
PermGroup intersection(const PermGroup& g, const PermGroup& a,
                       const PermGroup& b);
PermGroup conjugate(const PermGroup& h, const Perm& x);  // x h x^-1
/// x with x a x^-1 = b, if any.
bool are_conjugate(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                   Perm* witness = nullptr);

struct DoubleCoset {
  Perm rep;
  std::uint64_t size;
};
/// p\g/q, representatives lexicographically least, listed in increasing
/// representative order.
std::vector<DoubleCoset> double_cosets(const PermGroup& g, const PermGroup& p,
                                       const PermGroup& q);

struct SubgroupClassList {
  std::vector<PermGroup> reps;
  std::vector<std::uint64_t> class_sizes;
};
/// Conjugacy classes of p-subgroups, ordered by increasing order.
SubgroupClassList p_subgroups_up_to_conjugacy(const PermGroup& g, unsigned p);

/// Left cosets xH of h in g, indexed by their least element.
struct CosetTable {
  std::vector<std::uint32_t> reps;     // element index of each representative
  std::vector<std::uint32_t> coset_of; // element index -> coset
  /// images[k][c]: coset of generators[k] * rep_c
  std::vector<std::vector<Point>> gen_images;
  std::size_t size() const { return reps.size(); }
};
CosetTable left_cosets(const PermGroup& g, const PermGroup& h);
/// g acting on the cosets of h, one generator image per generator of g.
PermGroup coset_action(const PermGroup& g, const PermGroup& h,
                       const CosetTable& t);

std::uint64_t legendre_valuation(std::uint64_t n, unsigned p);

}  // namespace blockperm
