#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permlab/clique.hpp"
#include "permlab/group.hpp"

namespace permlab {

inline constexpr int kDefaultMaxGraphVertices = 10080;

// The derangement graph of a group action: the Cayley graph of G whose
// connection set is the derangement set. Vertex i is the i-th canonical
// element of the group; x ~ y iff x*y^-1 lies in the connection set.
//
// Non-faithful actions are allowed: the graph always lives on the full
// element set of G, with the connection set pulled back from the action.
struct DerangementGraph {
  const PermGroup* group = nullptr;
  Bitset connection;
  std::vector<Bitset> adjacency;

  int num_vertices() const { return int(adjacency.size()); }
  bool adjacent(int x, int y) const { return adjacency[x].test(y); }
  std::uint64_t num_edges() const;
};

// D(G) for the natural action implied by the group's degree.
Bitset derangement_set(const PermGroup& g);

// Cayley graph for an arbitrary connection set over element indices; the set
// must be identity-free and inverse-closed (both enforced).
DerangementGraph cayley_graph(const PermGroup& g, const Bitset& connection,
                              int max_vertices = kDefaultMaxGraphVertices);

DerangementGraph build_graph(const PermGroup& g,
                             int max_vertices = kDefaultMaxGraphVertices);

CliqueResult clique_number(const DerangementGraph& graph,
                           std::uint64_t node_budget = kDefaultNodeBudget,
                           const std::vector<int>& seed = {});

// Maximum independent set, computed as a maximum clique of the complement.
// Every returned witness is re-checked against the definitional criterion:
// two elements are intersecting iff they agree on some point of the action.
CliqueResult coclique_number(const DerangementGraph& graph,
                             std::uint64_t node_budget = kDefaultNodeBudget,
                             const std::vector<int>& seed = {});

struct CliqueSearch {
  bool found = false;
  bool conclusive = true; // false only when not found and the budget fired
  std::vector<int> witness;
};

// Early-exit search for a clique of a fixed size.
CliqueSearch has_clique_of_size(const DerangementGraph& graph, int size,
                                std::uint64_t node_budget = kDefaultNodeBudget);

bool triangle_exists(const DerangementGraph& graph);

// DIMACS export ("p edge n m" header, 1-based "e u v" lines) for
// cross-checking against third-party clique solvers.
std::string to_dimacs(const DerangementGraph& graph);

} // namespace permlab
