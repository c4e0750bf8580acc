#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "operad/endomorphism.hpp"
#include "operad/free_operad.hpp"
#include "operad/quotient.hpp"

namespace operad {

using Rng = std::mt19937_64;

/// Composition and action used by the term laws. Replaceable so tests can
/// check that a broken implementation is caught.
struct TermOps {
  std::function<Term(const Term&, std::span<const Term>)> gamma;
  std::function<Term(const Term&, std::size_t, const Term&)> circ;
  std::function<Term(const Term&, const Permutation&)> act;

  static TermOps standard();
};

Permutation random_permutation(std::size_t degree, Rng& rng);

/// Uniformly chosen generator at each vertex, random splits of the leaves,
/// random labels in symmetric mode. Throws UnsupportedError if the signature
/// has no term of arity n.
Term random_term(const SignaturePtr& signature, std::size_t n, Rng& rng);

/// Entries in -2..2, roughly half of them zero.
MultilinearMap random_map(std::size_t dim, std::size_t arity, Rng& rng);

/// A failed case carries a printable counterexample.
using CaseResult = std::optional<std::string>;

struct TermLawConfig {
  std::size_t max_arity = 5;
};

CaseResult term_associativity_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg = {});
CaseResult term_partial_sequential_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg = {});
CaseResult term_partial_parallel_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg = {});
CaseResult term_unit_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg = {});
/// Total and partial forms; symmetric mode only.
CaseResult term_equivariance_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg = {});
/// gamma against two different ∘_i orders.
CaseResult term_partial_total_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg = {});

struct EndoLawConfig {
  std::size_t max_dim = 3;
  std::size_t max_arity = 3;
};

CaseResult endo_associativity_case(Rng& rng, EndoLawConfig cfg = {});
CaseResult endo_partial_sequential_case(Rng& rng, EndoLawConfig cfg = {});
CaseResult endo_partial_parallel_case(Rng& rng, EndoLawConfig cfg = {});
CaseResult endo_unit_case(Rng& rng, EndoLawConfig cfg = {});
CaseResult endo_equivariance_case(Rng& rng, EndoLawConfig cfg = {});
CaseResult endo_partial_total_case(Rng& rng, EndoLawConfig cfg = {});

struct LawReport {
  std::string law;
  bool applicable = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;

  bool pass() const { return failures == 0; }
};

struct AxiomConfig {
  std::size_t cases = 100;
  std::uint64_t seed = 1;
  std::size_t max_arity = 5;
};

/// Rows: associativity (total and both partial forms), unit, equivariance,
/// partial-total. Equivariance is not applicable to planar signatures.
/// Deterministic for a fixed seed.
std::vector<LawReport> run_axiom_suite(const Presentation& p, const AxiomConfig& config,
                                       const TermOps& ops = TermOps::standard());

}  // namespace operad
