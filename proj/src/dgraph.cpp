#include "permlab/dgraph.hpp"

#include <sstream>

#include "permlab/errors.hpp"

namespace permlab {

std::uint64_t DerangementGraph::num_edges() const {
  std::uint64_t twice = 0;
  for (const auto& row : adjacency) twice += std::uint64_t(row.count());
  return twice / 2;
}

Bitset derangement_set(const PermGroup& g) {
  Bitset d(g.order());
  for (int i = 0; i < g.order(); ++i)
    if (is_derangement(g.element(i))) d.set(i);
  return d;
}

DerangementGraph cayley_graph(const PermGroup& g, const Bitset& connection,
                              int max_vertices) {
  const int n = g.order();
  if (n > max_vertices)
    throw GraphTooLarge("graph on " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(max_vertices) +
                        " (raise --max-graph-vertices if this is intended)");
  if (connection.size() != n)
    throw Error("connection set size does not match group order");
  if (connection.test(g.identity_index()))
    throw Error("connection set contains the identity (graph would have loops)");
  for (int d = connection.first(); d >= 0; d = connection.next(d))
    if (!connection.test(g.inverse_index(d)))
      throw Error("connection set is not inverse-closed");

  DerangementGraph graph;
  graph.group = &g;
  graph.connection = connection;
  graph.adjacency.assign(n, Bitset(n));
  // Neighbours of x are exactly the products d*x over the connection set:
  // x*(d*x)^-1 = d^-1 lies in the set since it is inverse-closed.
  for (int d = connection.first(); d >= 0; d = connection.next(d))
    for (int x = 0; x < n; ++x) graph.adjacency[x].set(g.product_index(d, x));

  const int degree = connection.count();
  for (int x = 0; x < n; ++x)
    if (graph.adjacency[x].count() != degree)
      throw ConstructionViolation("Cayley graph is not regular of degree |D|");
  return graph;
}

DerangementGraph build_graph(const PermGroup& g, int max_vertices) {
  return cayley_graph(g, derangement_set(g), max_vertices);
}

CliqueResult clique_number(const DerangementGraph& graph,
                           std::uint64_t node_budget,
                           const std::vector<int>& seed) {
  MaxCliqueSolver solver(graph.adjacency);
  return solver.solve(node_budget, 0, seed);
}

CliqueResult coclique_number(const DerangementGraph& graph,
                             std::uint64_t node_budget,
                             const std::vector<int>& seed) {
  const std::vector<Bitset> co = complement_adjacency(graph.adjacency);
  MaxCliqueSolver solver(co);
  CliqueResult result = solver.solve(node_budget, 0, seed);

  // Definitional cross-check on the witness: a coclique is an intersecting
  // set, so every pair must agree somewhere in the underlying action. For a
  // pulled-back action this still holds, because x*y^-1 not in the connection
  // set means x*y^-1 is not a derangement there.
  for (std::size_t i = 0; i < result.witness.size(); ++i)
    for (std::size_t j = i + 1; j < result.witness.size(); ++j) {
      const int x = result.witness[i], y = result.witness[j];
      const int q = graph.group->product_index(x, graph.group->inverse_index(y));
      if (graph.connection.test(q))
        throw ConstructionViolation("coclique witness contains an adjacent pair");
    }
  return result;
}

CliqueSearch has_clique_of_size(const DerangementGraph& graph, int size,
                                std::uint64_t node_budget) {
  CliqueSearch out;
  if (size <= 0) {
    out.found = true;
    return out;
  }
  MaxCliqueSolver solver(graph.adjacency);
  CliqueResult r = solver.solve(node_budget, size);
  if (r.size >= size) {
    out.found = true;
    out.witness = r.witness;
    out.witness.resize(size);
  } else {
    out.found = false;
    out.conclusive = r.exact;
  }
  return out;
}

bool triangle_exists(const DerangementGraph& graph) {
  return has_clique_of_size(graph, 3).found;
}

std::string to_dimacs(const DerangementGraph& graph) {
  std::ostringstream os;
  const int n = graph.num_vertices();
  os << "p edge " << n << ' ' << graph.num_edges() << '\n';
  for (int u = 0; u < n; ++u)
    for (int v = graph.adjacency[u].next(u); v >= 0; v = graph.adjacency[u].next(v))
      os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
  return os.str();
}

} // namespace permlab
