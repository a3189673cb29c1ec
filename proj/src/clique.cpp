#include "permlab/clique.hpp"

#include <algorithm>

#include "permlab/errors.hpp"

namespace permlab {

MaxCliqueSolver::MaxCliqueSolver(const std::vector<Bitset>& adjacency)
    : adj_(adjacency), n_(int(adjacency.size())) {}

CliqueResult MaxCliqueSolver::solve(std::uint64_t node_budget, int stop_at_size,
                                    const std::vector<int>& seed) {
  budget_ = node_budget;
  nodes_ = 0;
  out_of_budget_ = false;
  stop_early_ = false;
  stop_at_ = stop_at_size;
  best_.clear();
  current_.clear();

  for (std::size_t i = 0; i < seed.size(); ++i)
    for (std::size_t j = i + 1; j < seed.size(); ++j)
      if (!adj_[seed[i]].test(seed[j]))
        throw ConstructionViolation("clique seed is not a clique");
  best_ = seed;
  // Any single vertex is a clique; start from one so pruning has a floor.
  if (n_ > 0 && best_.empty()) best_.push_back(0);
  if (stop_at_ > 0 && int(best_.size()) >= stop_at_) stop_early_ = true;

  if (n_ > 0 && !stop_early_) {
    Bitset all = Bitset::full(n_);
    expand(all);
  }

  CliqueResult out;
  out.witness = best_;
  std::sort(out.witness.begin(), out.witness.end());
  out.size = int(out.witness.size());
  out.exact = !out_of_budget_ && !stop_early_;
  out.nodes = nodes_;
  return out;
}

void MaxCliqueSolver::expand(Bitset& candidates) {
  if (out_of_budget_ || stop_early_) return;
  if (++nodes_ > budget_) {
    out_of_budget_ = true;
    return;
  }

  // Greedy colouring of the candidate set; class k gets colour k+1.
  // Vertices come out grouped by colour, ascending.
  std::vector<int> order;
  std::vector<int> colour;
  Bitset uncoloured = candidates;
  int classes = 0;
  while (uncoloured.any()) {
    ++classes;
    Bitset avail = uncoloured;
    while (true) {
      const int v = avail.first();
      if (v < 0) break;
      avail.reset(v);
      avail.and_not(adj_[v]);
      uncoloured.reset(v);
      order.push_back(v);
      colour.push_back(classes);
    }
  }

  for (int i = int(order.size()) - 1; i >= 0; --i) {
    // colours ascend along `order`, so once one fails they all do
    if (int(current_.size()) + colour[i] <= int(best_.size())) return;
    const int v = order[i];
    current_.push_back(v);
    Bitset next = candidates;
    next &= adj_[v];
    if (next.any()) {
      expand(next);
    } else if (current_.size() > best_.size()) {
      best_ = current_;
      if (stop_at_ > 0 && int(best_.size()) >= stop_at_) stop_early_ = true;
    }
    current_.pop_back();
    if (out_of_budget_ || stop_early_) return;
    candidates.reset(v);
  }
}

std::vector<Bitset> complement_adjacency(const std::vector<Bitset>& adjacency) {
  const int n = int(adjacency.size());
  std::vector<Bitset> out(n, Bitset(n));
  for (int v = 0; v < n; ++v) {
    Bitset row = adjacency[v];
    row.flip_all();
    row.reset(v);
    out[v] = std::move(row);
  }
  return out;
}

} // namespace permlab
