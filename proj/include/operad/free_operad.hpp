#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "operad/permutation.hpp"
#include "operad/rational.hpp"
#include "operad/tree.hpp"

namespace operad {

enum class Mode { planar, symmetric };

std::string to_string(Mode mode);

struct Generator {
  std::string name;
  std::size_t arity;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generators of a free operad plus the planar/symmetric mode.
class Signature {
 public:
  Signature(std::vector<Generator> generators, Mode mode);

  Mode mode() const { return mode_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> find(std::string_view name) const;
  const Generator& generator(std::size_t index) const { return generators_.at(index); }

  /// True when every generator has arity >= 2, so each component of the free
  /// operad is finite dimensional.
  bool finite_components() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Generator> generators_;
  Mode mode_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<Generator> generators, Mode mode);

/// Basis element of the free operad: a planar tree whose vertices carry
/// generators, with leaf labels.
///
/// labels()[p] is the input index read at the p-th leaf in planar order, so
/// the term `mu(mu(2,3),1)` evaluates as (x2 x3) x1. In planar mode the labels
/// are always 1..n.
class Term {
 public:
  /// Validates decoration arities against the tree and that labels form a
  /// bijection of {1..n} (identity in planar mode).
  Term(SignaturePtr signature, OperadTree shape, std::vector<std::size_t> decoration, std::vector<int> labels);

  /// The operad unit: trivial tree, single leaf labelled 1.
  static Term unit(SignaturePtr signature);

  const Signature& signature() const { return *signature_; }
  const SignaturePtr& signature_ptr() const { return signature_; }
  const OperadTree& shape() const { return *shape_; }
  /// Generator index of each vertex, in the tree's preorder.
  const std::vector<std::size_t>& decoration() const { return decoration_; }
  const std::vector<int>& labels() const { return labels_; }
  /// Inverse of labels(): entry j-1 is the planar position (1-based) of input j.
  std::vector<int> input_positions() const;

  std::size_t arity() const { return labels_.size(); }
  std::size_t weight() const { return decoration_.size(); }
  bool is_unit() const { return shape_->is_trivial(); }

  /// Canonical serialization: preorder, vertex -> generator index + 1, leaf -> -label.
  const std::vector<int>& key() const { return key_; }

  friend bool operator==(const Term& a, const Term& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) { return a.key_ <=> b.key_; }

 private:
  SignaturePtr signature_;
  std::shared_ptr<const OperadTree> shape_;
  std::vector<std::size_t> decoration_;
  std::vector<int> labels_;
  std::vector<int> key_;
};

struct KeyHash {
  std::size_t operator()(const std::vector<int>& key) const {
    std::size_t h = key.size();
    for (int k : key) h = (h ^ static_cast<std::size_t>(k + 0x9e37)) * 0x100000001b3ULL;
    return h;
  }
};

/// The corolla of generator `name` with labels 1..n. Throws on unknown names.
Term gen_corolla(const SignaturePtr& signature, std::string_view name);

/// Total composition: args[i-1] is substituted at the leaf labelled i. Leaves
/// keep the host's planar order; a leaf labelled l inside args[i-1] becomes
/// arity(args[0]) + ... + arity(args[i-2]) + l.
Term gamma(const Term& host, std::span<const Term> args);

/// host ∘_i arg, i.e. gamma with units everywhere except label i.
Term circ(const Term& host, std::size_t i, const Term& arg);

/// Right action of S_n: the leaf labelled l is relabelled s^{-1}(l).
/// Throws UnsupportedError in planar mode.
Term act(const Term& t, const Permutation& s);

inline std::size_t weight(const Term& t) { return t.weight(); }

/// Number of basis terms of arity n (closed form is not used; counts shapes).
std::size_t basis_size(const Signature& signature, std::size_t n);

/// Every basis term of arity n sorted by key(). Throws UnsupportedError if a
/// generator has arity 0 or 1.
std::vector<Term> enumerate_basis(const SignaturePtr& signature, std::size_t n);

/// Finite formal sum of terms of one arity with nonzero rational coefficients.
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(const Term& t, const Rational& c = Rational(1));

  void add(const Term& t, const Rational& c);
  LinComb& operator+=(const LinComb& other);
  LinComb& operator-=(const LinComb& other);
  LinComb scaled(const Rational& c) const;

  /// Arity of the terms ever added, even if they cancelled.
  std::optional<std::size_t> arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Term, Rational>& terms() const { return terms_; }
  Rational coefficient(const Term& t) const;

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Term, Rational> terms_;
  std::optional<std::size_t> arity_;
};

inline LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
inline LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

LinComb lin_gamma(const LinComb& host, std::span<const LinComb> args);
LinComb lin_circ(const LinComb& host, std::size_t i, const LinComb& arg);
LinComb lin_act(const LinComb& v, const Permutation& s);

}  // namespace operad
