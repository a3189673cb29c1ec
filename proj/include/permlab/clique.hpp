#pragma once

#include <cstdint>
#include <vector>

#include "permlab/bitset.hpp"

namespace permlab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100000000ULL;

struct CliqueResult {
  int size = 0;
  std::vector<int> witness; // sorted vertex ids, pairwise adjacent
  bool exact = true;        // false iff the node budget fired first
  std::uint64_t nodes = 0;
};

// Exact maximum clique: branch and bound with a greedy-colouring upper bound
// over bitset candidate sets. Deterministic: vertices are processed in their
// given (canonical) order. If the node budget runs out, the best clique found
// so far is returned with exact=false; a cutoff is reported, never thrown.
class MaxCliqueSolver {
public:
  explicit MaxCliqueSolver(const std::vector<Bitset>& adjacency);

  // stop_at_size > 0 turns the search into an early-exit existence check:
  // it stops as soon as a clique of that size is found (exact=false then,
  // since the returned size is only a lower bound).
  //
  // seed, when given, must itself be a clique; it primes the incumbent so
  // the search only has to prove optimality.
  CliqueResult solve(std::uint64_t node_budget = kDefaultNodeBudget,
                     int stop_at_size = 0, const std::vector<int>& seed = {});

private:
  void expand(Bitset& candidates);

  const std::vector<Bitset>& adj_;
  int n_;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  bool stop_early_ = false;
  int stop_at_ = 0;
  std::vector<int> best_;
  std::vector<int> current_;
};

// Complement adjacency (no self-loops); the one coclique routine is the
// clique solver run on this.
std::vector<Bitset> complement_adjacency(const std::vector<Bitset>& adjacency);

} // namespace permlab
