#pragma once

#include <cstdint>
#include <vector>

#include "permlab/bitset.hpp"
#include "permlab/perm.hpp"

namespace permlab {

inline constexpr std::uint64_t kDefaultMaxOrder = 100000;

// A finite permutation group given by generators, with the full element
// table enumerated eagerly (desk scale by design; the cap makes larger
// instances fail loudly instead of silently thrashing).
//
// Elements are sorted lexicographically on image sequences, so element
// indices, coset labels and reports are reproducible across runs.
class PermGroup {
public:
  static PermGroup enumerate(std::vector<Permutation> generators, int degree,
                             std::uint64_t max_order = kDefaultMaxOrder);

  int degree() const { return degree_; }
  int order() const { return int(elems_.size()); }

  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  const Permutation& element(int i) const { return elems_[i]; }
  int identity_index() const { return identity_; }
  int inverse_index(int i) const { return inv_[i]; }

  // Index of p in the element table, -1 if absent.
  int index_of(const Permutation& p) const;
  // Same, but throws NotAnElement.
  int require_index(const Permutation& p) const;

  // Index of element(i)*element(j) (left factor acts first). No allocation.
  int product_index(int i, int j) const;
  // Index of element(g)^-1 * element(x) * element(g).
  int conjugate_index(int x, int g) const;

private:
  int degree_ = 0;
  int identity_ = 0;
  std::vector<Permutation> gens_;
  std::vector<int> gen_idx_;
  std::vector<Permutation> elems_;
  std::vector<int> inv_;

  // Open-addressed hash table over element indices; empty slots hold -1.
  std::vector<int> table_;
  std::uint64_t mask_ = 0;

  void build_index();
};

std::vector<std::vector<int>> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

// A subgroup is a sorted list of element indices into its parent group,
// plus a small generating set (also indices). Parent must outlive it.
struct Subgroup {
  const PermGroup* parent = nullptr;
  std::vector<int> elems; // sorted, closed under product and inverse
  std::vector<int> gens;

  int order() const { return int(elems.size()); }
  bool contains(int elem_index) const;
  Bitset bitset() const;
  std::uint64_t index_in_parent() const {
    return std::uint64_t(parent->order()) / std::uint64_t(elems.size());
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.elems == b.elems;
  }
};

Subgroup trivial_subgroup(const PermGroup& g);
Subgroup full_subgroup(const PermGroup& g);

// Closure of the given element indices inside g.
Subgroup subgroup_generated(const PermGroup& g, const std::vector<int>& gen_indices);

// Wraps an already-closed element list (sorted or not); recomputes a small
// generating set. Throws NotASubgroup if the list is not closed.
Subgroup subgroup_from_elements(const PermGroup& g, std::vector<int> elems);

Subgroup point_stabilizer(const PermGroup& g, int point);

Subgroup conjugate_subgroup(const Subgroup& u, int g_index);
Subgroup conjugate_subgroup(const Subgroup& u, const Permutation& g);

Subgroup normal_closure(const PermGroup& g, const std::vector<int>& seed_indices);
bool is_normal(const PermGroup& g, const Subgroup& n);

// Every subgroup, via join-closure of the cyclic subgroup pool.
// Output sorted by (order, element list); deterministic.
std::vector<Subgroup> all_subgroups(const PermGroup& g,
                                    int max_order_for_lattice = 2000);

// Conjugacy classes over a list of subgroups of g (indices into `subs`),
// each class sorted, classes ordered by their smallest member.
std::vector<std::vector<int>> subgroup_conjugacy_classes(
    const PermGroup& g, const std::vector<Subgroup>& subs);

// The action of g on the right cosets of u by right multiplication.
// Cosets are labeled in canonical order of their lex-minimal representative.
struct CosetAction {
  PermGroup image;                  // faithful induced group on cosets
  std::vector<Permutation> induced; // parent element index -> permutation of cosets
  std::vector<int> reps;            // coset -> lex-minimal representative element
  std::vector<int> coset_of;        // parent element index -> coset
  int num_cosets() const { return int(reps.size()); }

  // Elements of the parent acting without fixed cosets.
  Bitset pullback_derangements() const;
};

CosetAction coset_action(const PermGroup& g, const Subgroup& u);

} // namespace permlab
