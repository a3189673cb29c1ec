#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "permlab/group.hpp"

namespace permlab {

// A G-invariant partition of the point set. Blocks are sorted internally
// and ordered by their smallest point, so equal partitions compare equal.
struct BlockSystem {
  int degree = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;
  bool is_normal = false;
  std::optional<Subgroup> witness_kernel;

  int num_blocks() const { return int(blocks.size()); }
  int block_size() const { return blocks.empty() ? 0 : int(blocks[0].size()); }
  bool is_discrete() const { return num_blocks() == degree; }
  bool is_full() const { return num_blocks() == 1; }

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) {
    return a.degree == b.degree && a.blocks == b.blocks;
  }
};

// Canonicalize an arbitrary block-id labeling into a BlockSystem.
BlockSystem partition_from_block_of(int degree, const std::vector<int>& raw_block_of);

BlockSystem discrete_partition(int degree);
BlockSystem one_block_partition(int degree);

// Orbits of a subgroup as a partition of the parent's points.
BlockSystem orbit_partition(const PermGroup& g, const Subgroup& n);

bool is_g_invariant(const PermGroup& g, const BlockSystem& s);

// True iff `fine` refines `coarse` (every block of fine inside a block of coarse).
bool refines(const BlockSystem& fine, const BlockSystem& coarse);

// Finest G-invariant partition in which a and b share a block
// (union-find block algorithm). Requires transitivity.
BlockSystem minimal_block_system(const PermGroup& g, int a, int b);

// Kernel of the action of g on the block set: all elements mapping every
// block to itself. Normal in g. Throws NotABlockSystem if s is not invariant.
Subgroup block_kernel(const PermGroup& g, const BlockSystem& s);

struct NormalityVerdict {
  bool normal = false;
  Subgroup kernel;
};

// Decides whether s is a *normal* system of imprimitivity, i.e. whether some
// normal subgroup N of g has exactly the blocks of s as orbits.
//
// Reduction used: such an N exists iff the kernel G_(s) itself works.
// (If N exists then N <= G_(s), so the G_(s)-orbits contain the blocks; the
// kernel fixes every block setwise, so its orbits sit inside blocks too.
// Conversely the kernel is normal, so it is itself a witness.)
NormalityVerdict is_normal_system(const PermGroup& g, const BlockSystem& s);

// All normal subgroups of g: join-closure of normal closures of single
// elements (one per conjugacy class). Sorted by (order, elements).
std::vector<Subgroup> normal_subgroups(const PermGroup& g);

// All partitions arising as orbit partitions of normal subgroups, each with
// its witness kernel attached. Includes the discrete partition and {Omega}.
// Sorted finest-first (block count descending, then lexicographically).
std::vector<BlockSystem> normal_partitions(const PermGroup& g);

// Every nontrivial normal subgroup transitive.
bool is_quasiprimitive(const PermGroup& g);

// A longest chain in the refinement order on normal_partitions(g):
//   systems[0]   = {Omega}        (paper-style Sigma_0)
//   systems[ell] = singletons     (Sigma_ell)
// kernels[i] is the kernel of the action on systems[i]; kernels ascend from
// the trivial group at i=ell to the full group at i=0.
struct NormalSeries {
  std::vector<BlockSystem> systems;
  std::vector<Subgroup> kernels;

  int length() const { return int(systems.size()) - 1; } // ell
  // Number of proper, nontrivial systems in the chain (the stricter count).
  int interior_count() const { return std::max(0, length() - 1); }
};

NormalSeries max_normal_series(const PermGroup& g);

// Throws InvalidSeries unless s is a well-formed normal imprimitivity series
// for g with consistent kernels.
void validate_series(const PermGroup& g, const NormalSeries& s);

} // namespace permlab
