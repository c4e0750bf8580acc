#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "operad/linalg.hpp"
#include "operad/permutation.hpp"
#include "operad/rational.hpp"

namespace operad {

/// Element of End_V(n) = Hom(V^{⊗n}, V) as a dense tensor over the rationals.
///
/// f(e_{j1}, ..., e_{jn}) = Σ_i coeffs[i; j1..jn] e_i, indices 0-based,
/// stored row-major with the output index first. Arity 0 maps are vectors.
class MultilinearMap {
 public:
  /// Zero map.
  MultilinearMap(std::size_t dim, std::size_t arity);
  MultilinearMap(std::size_t dim, std::size_t arity, std::vector<Rational> coeffs);

  static MultilinearMap identity(std::size_t dim);
  static MultilinearMap constant(const DenseVector& v);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Number of input multi-indices, dim^arity.
  std::size_t input_count() const { return input_count_; }

  std::size_t flat_index(std::size_t out, std::span<const std::size_t> inputs) const;
  const Rational& at(std::size_t out, std::span<const std::size_t> inputs) const;
  Rational& at(std::size_t out, std::span<const std::size_t> inputs);
  /// Entry for a flat input multi-index.
  const Rational& at_flat(std::size_t out, std::size_t input) const { return coeffs_[out * input_count_ + input]; }
  Rational& at_flat(std::size_t out, std::size_t input) { return coeffs_[out * input_count_ + input]; }

  bool is_zero() const;

  friend bool operator==(const MultilinearMap&, const MultilinearMap&) = default;

 private:
  std::size_t dim_;
  std::size_t arity_;
  std::size_t input_count_;
  std::vector<Rational> coeffs_;
};

/// (v1..vN) ↦ f(args[0](block 1), ..., args[n-1](block n)) with consecutive
/// input blocks. Parallel over output entries.
MultilinearMap compose_endo(const MultilinearMap& f, std::span<const MultilinearMap> args);

/// Serial reference for compose_endo built on evaluate().
MultilinearMap compose_endo_reference(const MultilinearMap& f, std::span<const MultilinearMap> args);

/// (f·σ)(v1, ..., vn) = f(v_{σ⁻¹(1)}, ..., v_{σ⁻¹(n)}).
MultilinearMap act_endo(const MultilinearMap& f, const Permutation& s);

/// Exact multilinear contraction. Arity-0 maps return their vector.
DenseVector evaluate(const MultilinearMap& f, std::span<const DenseVector> inputs);

}  // namespace operad
