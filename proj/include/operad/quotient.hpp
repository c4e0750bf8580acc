#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "operad/free_operad.hpp"
#include "operad/linalg.hpp"

namespace operad {

struct Relation {
  std::string name;
  LinComb element;
};

/// ⟨generators | relations⟩ in planar or symmetric mode.
class Presentation {
 public:
  /// Every relation must be nonzero, over `signature`, and of one arity.
  Presentation(std::string name, SignaturePtr signature, std::vector<Relation> relations);

  const std::string& name() const { return name_; }
  const SignaturePtr& signature() const { return signature_; }
  const std::vector<Relation>& relations() const { return relations_; }

 private:
  std::string name_;
  SignaturePtr signature_;
  std::vector<Relation> relations_;
};

struct QuotientOptions {
  /// Largest arity accepted by the quotient routines.
  std::size_t max_arity = 6;
};

/// Spanning rows of the ideal component (R)(n) in the coordinates of basis.
struct IdealBasis {
  std::size_t arity;
  std::vector<Term> basis;
  RowMatrix spanning;
};

/// Coordinates for the arity-n component of a free operad.
class TermIndex {
 public:
  explicit TermIndex(std::vector<Term> basis);
  std::size_t size() const { return basis_.size(); }
  const std::vector<Term>& terms() const { return basis_; }
  std::optional<std::size_t> find(const std::vector<int>& key) const;
  /// Throws ShapeError if a term lies outside the basis (wrong arity or signature).
  SparseVector coordinates(const LinComb& v) const;

 private:
  std::vector<Term> basis_;
  std::unordered_map<std::vector<int>, std::size_t, KeyHash> index_;
};

/// Throws UnsupportedError unless arity n of the quotient can be computed:
/// every generator of arity >= 2, relations of arity >= 2, 1 <= n <= cap.
void check_supported(const Presentation& p, std::size_t n, const QuotientOptions& options = {});

/// Builds the spanning rows of (R)(n): every u ∘_i (r ∘ (s_1..s_m)) for basis
/// terms u, s_j and relations r, then (symmetric mode) every row acted on by
/// every permutation of S_n. Rows are handed to `sink` in deterministic
/// chunks; chunk contents are computed in parallel.
void generate_ideal_rows(const Presentation& p, std::size_t n, const TermIndex& index,
                         const std::function<void(std::vector<SparseVector>&&)>& sink, QuotientOptions options = {});

IdealBasis ideal_spanning_set(const Presentation& p, std::size_t n, QuotientOptions options = {});

/// One arity of the quotient operad: free basis plus echelon form of the ideal.
class QuotientComponent {
 public:
  QuotientComponent(const Presentation& p, std::size_t n, QuotientOptions options = {});

  std::size_t arity() const { return arity_; }
  std::size_t free_dim() const { return index_.size(); }
  std::size_t ideal_rank() const { return ideal_.rank(); }
  std::size_t quotient_dim() const { return free_dim() - ideal_rank(); }
  const TermIndex& index() const { return index_; }

  bool in_ideal(const LinComb& v) const;
  bool equal(const LinComb& v, const LinComb& w) const;

 private:
  std::size_t arity_;
  TermIndex index_;
  EchelonBasis ideal_;
};

std::size_t quotient_dim(const Presentation& p, std::size_t n, QuotientOptions options = {});

/// [v] = [w] in the quotient. Throws ShapeError on arity mismatch.
bool equal_mod_ideal(const Presentation& p, const LinComb& v, const LinComb& w, QuotientOptions options = {});

/// Every term of every relation has weight 2 (vacuously true without relations).
bool is_quadratic(const Presentation& p);

}  // namespace operad
