#include "operad/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "operad/error.hpp"

namespace operad {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw ShapeError("permutation of degree 0 is not represented");
  std::vector<bool> seen(word_.size() + 1, false);
  for (int w : word_) {
    if (w < 1 || static_cast<std::size_t>(w) > word_.size() || seen[static_cast<std::size_t>(w)])
      throw ShapeError("not a bijection of {1.." + std::to_string(word_.size()) + "}");
    seen[static_cast<std::size_t>(w)] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<int> w(degree);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word_.size(); ++i) os << (i ? "," : "") << word_[i];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree())
    throw ShapeError("cannot compose permutations of degrees " + std::to_string(s.degree()) + " and " +
                     std::to_string(t.degree()));
  std::vector<int> w(s.degree());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = s(t(static_cast<int>(i + 1)));
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& s) {
  std::vector<int> w(s.degree());
  for (std::size_t i = 0; i < w.size(); ++i) w[static_cast<std::size_t>(s.word()[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(w));
}

Permutation block_compose(const Permutation& s, std::span<const Permutation> blocks) {
  const std::size_t n = s.degree();
  if (blocks.size() != n)
    throw ShapeError("block composition needs " + std::to_string(n) + " blocks, got " + std::to_string(blocks.size()));
  // Output block position p holds input block s^{-1}(p).
  const Permutation s_inv = inverse(s);
  std::vector<int> out_offset(n + 1, 0);  // indexed by input block (1-based)
  int running = 0;
  for (std::size_t p = 1; p <= n; ++p) {
    const auto block = static_cast<std::size_t>(s_inv(static_cast<int>(p)));
    out_offset[block] = running;
    running += static_cast<int>(blocks[block - 1].degree());
  }
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(running));
  for (std::size_t i = 1; i <= n; ++i)
    for (int x : blocks[i - 1].word()) w.push_back(out_offset[i] + x);
  return Permutation(std::move(w));
}

Permutation partial_compose(const Permutation& s, std::size_t i, const Permutation& t) {
  if (i < 1 || i > s.degree())
    throw ShapeError("partial composition index " + std::to_string(i) + " outside 1.." + std::to_string(s.degree()));
  std::vector<Permutation> blocks(s.degree(), Permutation::identity(1));
  blocks[i - 1] = t;
  return block_compose(s, blocks);
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<int> w(degree);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace operad
