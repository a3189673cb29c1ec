#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace permlab {

// A permutation of {0,...,degree-1}, stored as its image sequence.
// Values are immutable once built; everything downstream shares them freely.
//
// Composition convention (fixed globally): points are acted on by the left
// factor first, i.e. compose(p,q) maps i to q(p(i)). This is the right
// action matching coset actions by right multiplication.
class Permutation {
public:
  Permutation() = default;

  // Validates that `images` is a bijection on {0,...,n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return int(img_.size()); }
  int operator()(int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;

  // Canonical order: lexicographic on image sequences.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> img_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

std::vector<int> fixed_points(const Permutation& p);
bool is_derangement(const Permutation& p);

// 1-based disjoint-cycle notation: perm := "()" | cycle+ ;
// cycle := "(" int (" " int)* ")". Whitespace-tolerant.
Permutation parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Permutation& p);

std::uint64_t perm_hash(const Permutation& p);

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    return std::size_t(perm_hash(p));
  }
};

} // namespace permlab
