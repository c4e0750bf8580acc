#pragma once

#include <cstddef>
#include <map>
#include <span>

#include "operad/permutation.hpp"
#include "operad/rational.hpp"

namespace operad {

/// Element of K[S_n]: the arity-n component of Ass.
class PermCombination {
 public:
  explicit PermCombination(std::size_t degree);
  explicit PermCombination(const Permutation& s, const Rational& c = Rational(1));

  std::size_t degree() const { return degree_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& s) const;

  /// Throws ShapeError on a degree mismatch.
  void add(const Permutation& s, const Rational& c);
  PermCombination& operator+=(const PermCombination& other);
  PermCombination scaled(const Rational& c) const;

  friend bool operator==(const PermCombination&, const PermCombination&) = default;

 private:
  std::size_t degree_;
  std::map<Permutation, Rational> terms_;
};

inline PermCombination operator+(PermCombination a, const PermCombination& b) { return a += b; }

/// Bilinear extension of block_compose.
PermCombination ass_compose(const PermCombination& host, std::span<const PermCombination> args);

/// Right regular action: σ ↦ σ∘s.
PermCombination ass_act(const PermCombination& x, const Permutation& s);

}  // namespace operad
