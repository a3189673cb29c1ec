#include "permlab/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "permlab/errors.hpp"

namespace permlab {

BlockSystem partition_from_block_of(int degree, const std::vector<int>& raw) {
  BlockSystem s;
  s.degree = degree;
  std::map<int, int> relabel; // raw id -> canonical id, in order of first point
  s.block_of.assign(degree, -1);
  for (int p = 0; p < degree; ++p) {
    auto [it, fresh] = relabel.try_emplace(raw[p], int(s.blocks.size()));
    if (fresh) s.blocks.emplace_back();
    s.block_of[p] = it->second;
    s.blocks[it->second].push_back(p);
  }
  return s;
}

BlockSystem discrete_partition(int degree) {
  std::vector<int> ids(degree);
  for (int i = 0; i < degree; ++i) ids[i] = i;
  return partition_from_block_of(degree, ids);
}

BlockSystem one_block_partition(int degree) {
  return partition_from_block_of(degree, std::vector<int>(degree, 0));
}

BlockSystem orbit_partition(const PermGroup& g, const Subgroup& n) {
  std::vector<int> id(g.degree(), -1);
  int next = 0;
  for (int start = 0; start < g.degree(); ++start) {
    if (id[start] >= 0) continue;
    const int c = next++;
    std::vector<int> orbit{start};
    id[start] = c;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (int gen : n.gens) {
        const int to = g.element(gen)(orbit[k]);
        if (id[to] < 0) {
          id[to] = c;
          orbit.push_back(to);
        }
      }
  }
  return partition_from_block_of(g.degree(), id);
}

bool is_g_invariant(const PermGroup& g, const BlockSystem& s) {
  if (s.degree != g.degree() || int(s.block_of.size()) != g.degree()) return false;
  for (const auto& gen : g.generators())
    for (const auto& block : s.blocks) {
      const int to = s.block_of[gen(block[0])];
      for (int p : block)
        if (s.block_of[gen(p)] != to) return false;
    }
  return true;
}

bool refines(const BlockSystem& fine, const BlockSystem& coarse) {
  if (fine.degree != coarse.degree) return false;
  for (const auto& block : fine.blocks) {
    const int c = coarse.block_of[block[0]];
    for (int p : block)
      if (coarse.block_of[p] != c) return false;
  }
  return true;
}

BlockSystem minimal_block_system(const PermGroup& g, int a, int b) {
  if (a < 0 || a >= g.degree() || b < 0 || b >= g.degree())
    throw PointOutOfRange("minimal_block_system: point out of range");
  if (a == b) throw Error("minimal_block_system: points must be distinct");
  if (!is_transitive(g)) throw NotTransitive("minimal_block_system needs a transitive group");

  std::vector<int> parent(g.degree());
  for (int i = 0; i < g.degree(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  };

  unite(a, b);
  // Coarsen until every generator maps classes onto classes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& gen : g.generators()) {
      std::vector<int> image_class(g.degree(), -1);
      for (int x = 0; x < g.degree(); ++x) {
        const int cls = find(x);
        const int img = find(gen(x));
        if (image_class[cls] < 0)
          image_class[cls] = img;
        else if (find(image_class[cls]) != img)
          changed |= unite(image_class[cls], img);
      }
    }
  }

  std::vector<int> ids(g.degree());
  for (int i = 0; i < g.degree(); ++i) ids[i] = find(i);
  return partition_from_block_of(g.degree(), ids);
}

Subgroup block_kernel(const PermGroup& g, const BlockSystem& s) {
  if (!is_g_invariant(g, s))
    throw NotABlockSystem("partition is not invariant under the group");
  std::vector<int> elems;
  for (int i = 0; i < g.order(); ++i) {
    const Permutation& e = g.element(i);
    bool fixes_all = true;
    for (int p = 0; p < g.degree() && fixes_all; ++p)
      fixes_all = s.block_of[e(p)] == s.block_of[p];
    if (fixes_all) elems.push_back(i);
  }
  return subgroup_from_elements(g, std::move(elems));
}

NormalityVerdict is_normal_system(const PermGroup& g, const BlockSystem& s) {
  NormalityVerdict v;
  v.kernel = block_kernel(g, s); // throws NotABlockSystem if not invariant
  v.normal = orbit_partition(g, v.kernel) == s;
  return v;
}

std::vector<Subgroup> normal_subgroups(const PermGroup& g) {
  // One normal closure per element conjugacy class; these are the atoms.
  std::vector<int> cls(g.order(), -1);
  std::vector<int> reps;
  for (int e = 0; e < g.order(); ++e) {
    if (cls[e] >= 0) continue;
    reps.push_back(e);
    std::vector<int> orbit{e};
    cls[e] = e;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (int gg : g.generator_indices()) {
        const int c = g.conjugate_index(orbit[k], gg);
        if (cls[c] < 0) {
          cls[c] = e;
          orbit.push_back(c);
        }
      }
  }

  std::set<std::vector<int>> have;
  std::vector<Subgroup> subs{trivial_subgroup(g)};
  have.insert(subs[0].elems);
  std::vector<Subgroup> atoms;
  for (int e : reps) {
    if (e == g.identity_index()) continue;
    Subgroup n = normal_closure(g, {e});
    if (have.insert(n.elems).second) {
      atoms.push_back(n);
      subs.push_back(std::move(n));
    }
  }

  // Every normal subgroup is a join of atoms; close under pairwise join.
  for (std::size_t at = 0; at < subs.size(); ++at)
    for (const auto& a : atoms) {
      if (std::includes(subs[at].elems.begin(), subs[at].elems.end(),
                        a.elems.begin(), a.elems.end()))
        continue;
      std::vector<int> join = subs[at].gens;
      join.insert(join.end(), a.gens.begin(), a.gens.end());
      Subgroup j = subgroup_generated(g, join);
      if (have.insert(j.elems).second) subs.push_back(std::move(j));
    }

  std::sort(subs.begin(), subs.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.elems.size() != y.elems.size()) return x.elems.size() < y.elems.size();
    return x.elems < y.elems;
  });
  return subs;
}

std::vector<BlockSystem> normal_partitions(const PermGroup& g) {
  if (!is_transitive(g)) throw NotTransitive("normal_partitions needs a transitive group");

  std::vector<BlockSystem> out;
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& n : normal_subgroups(g)) {
    BlockSystem s = orbit_partition(g, n);
    if (!seen.insert(s.blocks).second) continue;
    // Transitivity forces uniform blocks for any invariant partition.
    for (const auto& b : s.blocks)
      if (int(b.size()) != s.block_size())
        throw ConstructionViolation("orbit partition of a normal subgroup is not uniform");
    NormalityVerdict v = is_normal_system(g, s);
    if (!v.normal)
      throw ConstructionViolation("kernel orbits disagree with a normal-subgroup partition");
    s.is_normal = true;
    s.witness_kernel = std::move(v.kernel);
    out.push_back(std::move(s));
  }

  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
    return a.blocks < b.blocks;
  });
  return out;
}

bool is_quasiprimitive(const PermGroup& g) {
  for (const auto& n : normal_subgroups(g)) {
    if (n.order() == 1) continue;
    if (orbit_partition(g, n).num_blocks() != 1) return false;
  }
  return true;
}

NormalSeries max_normal_series(const PermGroup& g) {
  const std::vector<BlockSystem> parts = normal_partitions(g); // finest-first
  const int m = int(parts.size());

  int discrete_at = -1, full_at = -1;
  for (int i = 0; i < m; ++i) {
    if (parts[i].is_discrete()) discrete_at = i;
    if (parts[i].is_full()) full_at = i;
  }

  // Longest path in the strict-refinement DAG from the discrete partition to
  // {Omega}. parts is already topologically ordered (block count descending),
  // so a single sweep computes it; ties prefer the lexicographically smallest
  // partition sequence.
  std::vector<int> best_len(m, -1);
  std::vector<std::vector<int>> best_chain(m);
  best_len[discrete_at] = 0;
  best_chain[discrete_at] = {discrete_at};
  for (int v = 0; v < m; ++v) {
    if (v == discrete_at) continue;
    for (int u = 0; u < m; ++u) {
      if (best_len[u] < 0 || parts[u].num_blocks() <= parts[v].num_blocks()) continue;
      if (!refines(parts[u], parts[v])) continue;
      const int len = best_len[u] + 1;
      std::vector<int> chain = best_chain[u];
      chain.push_back(v);
      auto lex_key = [&](const std::vector<int>& c) {
        std::vector<std::vector<std::vector<int>>> k;
        for (int x : c) k.push_back(parts[x].blocks);
        return k;
      };
      if (len > best_len[v] ||
          (len == best_len[v] && lex_key(chain) < lex_key(best_chain[v]))) {
        best_len[v] = len;
        best_chain[v] = std::move(chain);
      }
    }
  }

  NormalSeries series;
  const std::vector<int>& chain = best_chain[full_at]; // finest ... coarsest
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    series.systems.push_back(parts[*it]);
    series.kernels.push_back(block_kernel(g, parts[*it]));
  }
  return series;
}

void validate_series(const PermGroup& g, const NormalSeries& s) {
  if (s.systems.empty() || s.systems.size() != s.kernels.size())
    throw InvalidSeries("series must pair each system with its kernel");
  if (!s.systems.front().is_full())
    throw InvalidSeries("series must start at the one-block partition");
  if (!s.systems.back().is_discrete())
    throw InvalidSeries("series must end at the discrete partition");
  for (std::size_t i = 0; i < s.systems.size(); ++i) {
    const BlockSystem& sys = s.systems[i];
    NormalityVerdict v = is_normal_system(g, sys); // NotABlockSystem if not invariant
    if (!v.normal) throw InvalidSeries("series contains a non-normal block system");
    if (v.kernel.elems != s.kernels[i].elems)
      throw InvalidSeries("stored kernel disagrees with the block kernel");
    if (i + 1 < s.systems.size()) {
      const BlockSystem& finer = s.systems[i + 1];
      if (!(refines(finer, sys) && !(finer == sys)))
        throw InvalidSeries("series steps must strictly refine");
      if (!std::includes(s.kernels[i].elems.begin(), s.kernels[i].elems.end(),
                         s.kernels[i + 1].elems.begin(), s.kernels[i + 1].elems.end()))
        throw InvalidSeries("kernels must form an ascending chain");
    }
  }
}

} // namespace permlab
