#include "permlab/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

std::uint64_t next_pow2(std::uint64_t x) {
  std::uint64_t p = 1;
  while (p < x) p <<= 1;
  return p;
}

} // namespace

PermGroup PermGroup::enumerate(std::vector<Permutation> generators, int degree,
                               std::uint64_t max_order) {
  if (degree < 1) throw Error("degree must be positive");
  if (max_order < 1) throw Error("max_order must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " + std::to_string(degree));

  std::unordered_map<Permutation, int, PermHash> seen;
  std::vector<Permutation> elems;
  elems.push_back(Permutation::identity(degree));
  seen.emplace(elems[0], 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(elems[at], g);
      if (seen.find(next) != seen.end()) continue;
      if (elems.size() >= max_order)
        throw OrderCapExceeded("group closure exceeds max_order=" +
                               std::to_string(max_order) +
                               " (raise the cap if this is intended)");
      seen.emplace(next, int(elems.size()));
      elems.push_back(std::move(next));
      queue.push_back(int(elems.size()) - 1);
    }
  }

  std::sort(elems.begin(), elems.end());

  PermGroup out;
  out.degree_ = degree;
  out.gens_ = std::move(generators);
  out.elems_ = std::move(elems);
  out.build_index();

  out.identity_ = out.index_of(Permutation::identity(degree));
  out.inv_.resize(out.order());
  for (int i = 0; i < out.order(); ++i) out.inv_[i] = out.index_of(inverse(out.elems_[i]));
  out.gen_idx_.reserve(out.gens_.size());
  for (const auto& g : out.gens_) out.gen_idx_.push_back(out.index_of(g));
  return out;
}

void PermGroup::build_index() {
  const std::uint64_t cap = next_pow2(std::uint64_t(elems_.size()) * 2 + 2);
  table_.assign(cap, -1);
  mask_ = cap - 1;
  for (int i = 0; i < int(elems_.size()); ++i) {
    std::uint64_t b = perm_hash(elems_[i]) & mask_;
    while (table_[b] >= 0) b = (b + 1) & mask_;
    table_[b] = i;
  }
}

int PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return -1;
  for (std::uint64_t b = perm_hash(p) & mask_;; b = (b + 1) & mask_) {
    const int id = table_[b];
    if (id < 0) return -1;
    if (elems_[id] == p) return id;
  }
}

int PermGroup::require_index(const Permutation& p) const {
  const int id = index_of(p);
  if (id < 0)
    throw NotAnElement("permutation " + format_cycles(p) + " is not in the group");
  return id;
}

int PermGroup::product_index(int i, int j) const {
  const auto& p = elems_[i].images();
  const auto& q = elems_[j].images();
  // Hash of the product q(p(.)) computed on the fly; same recipe as perm_hash.
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t(degree_) << 32);
  for (int k = 0; k < degree_; ++k) {
    h ^= std::uint64_t(q[p[k]]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  for (std::uint64_t b = h & mask_;; b = (b + 1) & mask_) {
    const int id = table_[b];
    if (id < 0) return -1;
    const auto& r = elems_[id].images();
    bool eq = true;
    for (int k = 0; k < degree_; ++k)
      if (r[k] != q[p[k]]) {
        eq = false;
        break;
      }
    if (eq) return id;
  }
}

int PermGroup::conjugate_index(int x, int g) const {
  return product_index(product_index(inv_[g], x), g);
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  std::vector<int> orbit_of(g.degree(), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < g.degree(); ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = int(out.size());
    std::vector<int> orbit{start};
    orbit_of[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& gen : g.generators()) {
        const int to = gen(orbit[k]);
        if (orbit_of[to] < 0) {
          orbit_of[to] = id;
          orbit.push_back(to);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

bool Subgroup::contains(int elem_index) const {
  return std::binary_search(elems.begin(), elems.end(), elem_index);
}

Bitset Subgroup::bitset() const {
  Bitset b(parent->order());
  for (int e : elems) b.set(e);
  return b;
}

namespace {

// BFS closure of generator indices inside g; returns sorted element indices.
std::vector<int> close_indices(const PermGroup& g, const std::vector<int>& gens) {
  Bitset have(g.order());
  have.set(g.identity_index());
  std::vector<int> out{g.identity_index()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int gen : gens) {
      const int next = g.product_index(out[k], gen);
      if (!have.test(next)) {
        have.set(next);
        out.push_back(next);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy reduction: pick elements not yet generated until they span.
std::vector<int> reduce_generators(const PermGroup& g, const std::vector<int>& elems) {
  std::vector<int> gens;
  std::vector<int> span{g.identity_index()};
  Bitset have(g.order());
  have.set(g.identity_index());
  for (int e : elems) {
    if (have.test(e)) continue;
    gens.push_back(e);
    span = close_indices(g, gens);
    have = Bitset(g.order());
    for (int x : span) have.set(x);
    if (span.size() == elems.size()) break;
  }
  return gens;
}

} // namespace

Subgroup trivial_subgroup(const PermGroup& g) {
  return Subgroup{&g, {g.identity_index()}, {}};
}

Subgroup full_subgroup(const PermGroup& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup{&g, std::move(all), g.generator_indices()};
}

Subgroup subgroup_generated(const PermGroup& g, const std::vector<int>& gen_indices) {
  Subgroup out;
  out.parent = &g;
  out.elems = close_indices(g, gen_indices);
  out.gens = reduce_generators(g, out.elems);
  return out;
}

Subgroup subgroup_from_elements(const PermGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup out;
  out.parent = &g;
  out.gens = reduce_generators(g, elems);
  out.elems = std::move(elems);
  const auto closed = close_indices(g, out.gens);
  if (closed != out.elems)
    throw NotASubgroup("element list is not closed under the group operation");
  return out;
}

Subgroup point_stabilizer(const PermGroup& g, int point) {
  if (point < 0 || point >= g.degree())
    throw PointOutOfRange("stabilizer point " + std::to_string(point) +
                          " out of range for degree " + std::to_string(g.degree()));
  std::vector<int> elems;
  for (int i = 0; i < g.order(); ++i)
    if (g.element(i)(point) == point) elems.push_back(i);
  Subgroup out;
  out.parent = &g;
  out.elems = std::move(elems); // already sorted: filtered in index order
  out.gens = reduce_generators(g, out.elems);
  return out;
}

Subgroup conjugate_subgroup(const Subgroup& u, int g_index) {
  const PermGroup& g = *u.parent;
  Subgroup out;
  out.parent = &g;
  out.elems.reserve(u.elems.size());
  for (int e : u.elems) out.elems.push_back(g.conjugate_index(e, g_index));
  std::sort(out.elems.begin(), out.elems.end());
  out.gens.reserve(u.gens.size());
  for (int e : u.gens) out.gens.push_back(g.conjugate_index(e, g_index));
  return out;
}

Subgroup conjugate_subgroup(const Subgroup& u, const Permutation& g) {
  return conjugate_subgroup(u, u.parent->require_index(g));
}

Subgroup normal_closure(const PermGroup& g, const std::vector<int>& seed_indices) {
  std::vector<int> gens = seed_indices;
  std::vector<int> elems = close_indices(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (int gg : g.generator_indices()) {
        const int c = g.conjugate_index(gens[k], gg);
        if (!std::binary_search(elems.begin(), elems.end(), c)) {
          gens.push_back(c);
          elems = close_indices(g, gens);
          grew = true;
        }
      }
  }
  Subgroup out;
  out.parent = &g;
  out.gens = reduce_generators(g, elems);
  out.elems = std::move(elems);
  return out;
}

bool is_normal(const PermGroup& g, const Subgroup& n) {
  for (int gg : g.generator_indices())
    for (int e : n.elems)
      if (!n.contains(g.conjugate_index(e, gg))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const PermGroup& g, int max_order_for_lattice) {
  if (g.order() > max_order_for_lattice)
    throw OrderCapExceeded("subgroup lattice for order " + std::to_string(g.order()) +
                           " exceeds cap " + std::to_string(max_order_for_lattice));

  // Pool: all distinct cyclic subgroups. Every subgroup is a join of these.
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> pool;
  for (int e = 0; e < g.order(); ++e) {
    Subgroup c = subgroup_generated(g, {e});
    if (seen.insert(c.elems).second) pool.push_back(std::move(c));
  }

  std::vector<Subgroup> subs;
  subs.push_back(trivial_subgroup(g));
  std::set<std::vector<int>> have;
  have.insert(subs[0].elems);
  for (const auto& c : pool)
    if (have.insert(c.elems).second) subs.push_back(c);

  for (std::size_t at = 0; at < subs.size(); ++at) {
    for (const auto& c : pool) {
      if (std::includes(subs[at].elems.begin(), subs[at].elems.end(),
                        c.elems.begin(), c.elems.end()))
        continue;
      std::vector<int> join_gens = subs[at].gens;
      join_gens.insert(join_gens.end(), c.gens.begin(), c.gens.end());
      Subgroup j = subgroup_generated(g, join_gens);
      if (have.insert(j.elems).second) subs.push_back(std::move(j));
    }
  }

  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return subs;
}

std::vector<std::vector<int>> subgroup_conjugacy_classes(
    const PermGroup& g, const std::vector<Subgroup>& subs) {
  std::unordered_map<std::uint64_t, std::vector<int>> by_hash;
  auto key = [](const std::vector<int>& v) {
    std::uint64_t h = 0x100000001b3ULL;
    for (int x : v) {
      h ^= std::uint64_t(x);
      h *= 0x100000001b3ULL;
    }
    return h;
  };
  auto find_sub = [&](const std::vector<int>& elems) -> int {
    auto it = by_hash.find(key(elems));
    if (it == by_hash.end()) return -1;
    for (int id : it->second)
      if (subs[id].elems == elems) return id;
    return -1;
  };
  for (int i = 0; i < int(subs.size()); ++i) by_hash[key(subs[i].elems)].push_back(i);

  std::vector<int> cls(subs.size(), -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < int(subs.size()); ++i) {
    if (cls[i] >= 0) continue;
    const int id = int(classes.size());
    std::vector<int> members{i};
    cls[i] = id;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int gg : g.generator_indices()) {
        Subgroup conj = conjugate_subgroup(subs[members[k]], gg);
        const int j = find_sub(conj.elems);
        if (j < 0)
          throw ConstructionViolation(
              "conjugate of a listed subgroup missing from the lattice");
        if (cls[j] < 0) {
          cls[j] = id;
          members.push_back(j);
        }
      }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

CosetAction coset_action(const PermGroup& g, const Subgroup& u) {
  if (u.parent != &g)
    throw NotASubgroup("subgroup does not belong to this group");
  if (u.elems.empty() || !u.contains(g.identity_index()))
    throw NotASubgroup("subgroup must contain the identity");

  CosetAction out;
  out.coset_of.assign(g.order(), -1);
  // Scan elements in canonical order; each new coset is discovered at its
  // lex-minimal representative.
  for (int e = 0; e < g.order(); ++e) {
    if (out.coset_of[e] >= 0) continue;
    const int c = int(out.reps.size());
    out.reps.push_back(e);
    for (int uu : u.elems) out.coset_of[g.product_index(uu, e)] = c;
    if (out.coset_of[e] != c)
      throw NotASubgroup("element list does not behave like a subgroup");
  }

  const int m = out.num_cosets();
  out.induced.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> img(m);
    for (int c = 0; c < m; ++c) img[c] = out.coset_of[g.product_index(out.reps[c], x)];
    out.induced.emplace_back(std::move(img));
  }

  std::vector<Permutation> image_gens;
  for (int gi : g.generator_indices()) image_gens.push_back(out.induced[gi]);
  // The image is a quotient of g, so its order can never exceed g's.
  out.image = PermGroup::enumerate(std::move(image_gens), m, std::uint64_t(g.order()));
  return out;
}

Bitset CosetAction::pullback_derangements() const {
  Bitset b(int(induced.size()));
  for (int x = 0; x < int(induced.size()); ++x)
    if (is_derangement(induced[x])) b.set(x);
  return b;
}

} // namespace permlab
