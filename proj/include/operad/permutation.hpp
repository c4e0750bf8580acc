#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace operad {

/// Bijection of {1..n}, n >= 1, in one-line form: i maps to word()[i-1].
class Permutation {
 public:
  /// Throws ShapeError unless `word` is a bijection of {1..n} with n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return word_.size(); }
  /// Image of i, 1-based.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const { return word_; }
  bool is_identity() const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// (s∘t)(i) = s(t(i)).
Permutation compose(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& s);

/// Composition in the symmetries operad: blocks[i] permutes the i-th input
/// block (of size blocks[i].degree()), then input block i is moved to output
/// block position s(i).
Permutation block_compose(const Permutation& s, std::span<const Permutation> blocks);

/// s ∘_i t: block_compose with t at slot i and identities elsewhere.
Permutation partial_compose(const Permutation& s, std::size_t i, const Permutation& t);

/// All permutations of the given degree in lexicographic order of their words.
std::vector<Permutation> all_permutations(std::size_t degree);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace operad

template <>
struct std::hash<operad::Permutation> {
  std::size_t operator()(const operad::Permutation& p) const {
    std::size_t h = p.degree();
    for (int w : p.word()) h = h * 1315423911u + static_cast<std::size_t>(w);
    return h;
  }
};
