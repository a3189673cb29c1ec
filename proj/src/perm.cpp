#include "permlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "permlab/errors.hpp"

namespace permlab {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = int(img_.size());
  std::vector<char> seen(n, 0);
  for (int v : img_) {
    if (v < 0 || v >= n || seen[v])
      throw MalformedCycles("image sequence is not a bijection on {0,...," +
                            std::to_string(n - 1) + "}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.img_.resize(degree);
  for (int i = 0; i < degree; ++i) p.img_[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degree " + std::to_string(p.degree()) +
                         " vs " + std::to_string(q.degree()));
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q(p(i));
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[p(i)] = i;
  return Permutation(std::move(img));
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> out;
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) == i) out.push_back(i);
  return out;
}

bool is_derangement(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) == i) return false;
  return true;
}

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::vector<char> used(degree, 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw MalformedCycles("expected '(' at position " + std::to_string(pos) +
                            " in \"" + text + "\"");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size())
        throw MalformedCycles("unterminated cycle in \"" + text + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw MalformedCycles("unexpected character '" + std::string(1, text[pos]) +
                              "' in \"" + text + "\"");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (value < 1 || value > degree)
        throw PointOutOfRange("point " + std::to_string(value) +
                              " out of range for degree " + std::to_string(degree));
      int p = value - 1; // 1-based text, 0-based internally
      if (used[p])
        throw MalformedCycles("point " + std::to_string(value) +
                              " appears twice in \"" + text + "\"");
      used[p] = 1;
      cycle.push_back(p);
    }
    saw_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  if (!saw_cycle)
    throw MalformedCycles("empty permutation text: \"" + text + "\"");
  return Permutation(std::move(img));
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> seen(p.degree(), 0);
  bool wrote = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    os << '(' << (i + 1);
    seen[i] = 1;
    for (int j = p(i); j != i; j = p(j)) {
      os << ' ' << (j + 1);
      seen[j] = 1;
    }
    os << ')';
    wrote = true;
  }
  if (!wrote) return "()";
  return os.str();
}

std::uint64_t perm_hash(const Permutation& p) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t(p.degree()) << 32);
  for (int i = 0; i < p.degree(); ++i) {
    h ^= std::uint64_t(p(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h;
}

} // namespace permlab
