#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "operad/endomorphism.hpp"
#include "operad/quotient.hpp"

namespace operad {

/// Operad morphism from a presented operad to End_V, given on generators.
/// The unit goes to the identity of V.
class Representation {
 public:
  /// Every generator needs an image of its arity on V; foreign names are rejected.
  Representation(std::shared_ptr<const Presentation> presentation, std::size_t dim,
                 std::map<std::string, MultilinearMap> images);

  const Presentation& presentation() const { return *presentation_; }
  const std::shared_ptr<const Presentation>& presentation_ptr() const { return presentation_; }
  std::size_t dim() const { return dim_; }
  const MultilinearMap& image(std::string_view generator) const;
  const std::map<std::string, MultilinearMap>& images() const { return images_; }

 private:
  std::shared_ptr<const Presentation> presentation_;
  std::size_t dim_;
  std::map<std::string, MultilinearMap> images_;
};

/// Outcome of a structural check. `subject` names the failing relation or
/// generator; `witness` is the offending coefficient index `[i;j1,...,jn]`
/// (1-based).
struct Verdict {
  bool pass = true;
  std::string subject;
  std::string witness;

  static Verdict ok() { return {}; }
  explicit operator bool() const { return pass; }
};

/// The unique extension of the representation to a term: the unit goes to the
/// identity, a generator corolla to its image, grafting to compose_endo and
/// leaf labels to act_endo.
MultilinearMap derived_map(const Representation& r, const Term& t);
/// Linear extension. The zero combination needs a known arity.
MultilinearMap derived_map(const Representation& r, const LinComb& v);

/// Checks that every relation maps to the zero tensor; reports the first failure.
Verdict check_relations(const Representation& r);

/// Representation sending the single binary generator of `p` to `m`. Does not
/// validate any axiom.
Representation rep_from_binary(std::shared_ptr<const Presentation> p, const MultilinearMap& m);

/// Image of the single binary generator.
MultilinearMap binary_from_rep(const Representation& r);

/// Rectangular linear map f: K^domain -> K^codomain, entries row-major
/// (codomain rows).
struct LinearMap {
  std::size_t domain;
  std::size_t codomain;
  std::vector<Rational> entries;

  static LinearMap identity(std::size_t dim);
  static LinearMap zero(std::size_t domain, std::size_t codomain);
  const Rational& at(std::size_t row, std::size_t col) const { return entries[row * domain + col]; }
};

/// f ∘ Φ^V(g) = Φ^W(g) ∘ f^{⊗k} for every generator g. Checking generators
/// suffices: every term decomposes into generator corollas and an action.
Verdict is_algebra_morphism(const LinearMap& f, const Representation& v, const Representation& w);

/// A concrete algebra: named structure maps on one space. Binary generators
/// bind to "product", 0-ary generators to "unit".
struct AlgebraSpec {
  std::string name;
  std::size_t dim;
  std::map<std::string, MultilinearMap> structure;
};

/// cross3, mat2, sub, zero; plus `scalar` (the ground field as a 1-dim algebra).
const AlgebraSpec& builtin_algebra(std::string_view name);
std::vector<std::string> builtin_algebra_names();

Representation rep_from_algebra(std::shared_ptr<const Presentation> p, const AlgebraSpec& algebra);

}  // namespace operad
