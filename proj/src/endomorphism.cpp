#include "operad/endomorphism.hpp"

#include <string>

#include "operad/error.hpp"

namespace operad {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Digits of a flat multi-index, most significant first.
void decode(std::size_t flat, std::size_t dim, std::span<std::size_t> digits) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = flat % dim;
    flat /= dim;
  }
}

std::size_t encode(std::span<const std::size_t> digits, std::size_t dim) {
  std::size_t flat = 0;
  for (auto d : digits) flat = flat * dim + d;
  return flat;
}

void require_dims(const MultilinearMap& f, std::span<const MultilinearMap> args) {
  if (args.size() != f.arity())
    throw ShapeError("composition needs " + std::to_string(f.arity()) + " maps, got " + std::to_string(args.size()));
  for (const auto& g : args)
    if (g.dim() != f.dim())
      throw ShapeError("maps on spaces of dimension " + std::to_string(f.dim()) + " and " + std::to_string(g.dim()));
}

}  // namespace

MultilinearMap::MultilinearMap(std::size_t dim, std::size_t arity)
    : dim_(dim), arity_(arity), input_count_(power(dim, arity)), coeffs_(dim * input_count_) {
  if (dim == 0) throw ShapeError("dimension must be positive");
}

MultilinearMap::MultilinearMap(std::size_t dim, std::size_t arity, std::vector<Rational> coeffs)
    : MultilinearMap(dim, arity) {
  if (coeffs.size() != coeffs_.size())
    throw ShapeError("expected " + std::to_string(coeffs_.size()) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  coeffs_ = std::move(coeffs);
}

MultilinearMap MultilinearMap::identity(std::size_t dim) {
  MultilinearMap m(dim, 1);
  for (std::size_t i = 0; i < dim; ++i) m.coeffs_[i * dim + i] = Rational(1);
  return m;
}

MultilinearMap MultilinearMap::constant(const DenseVector& v) { return MultilinearMap(v.size(), 0, v); }

std::size_t MultilinearMap::flat_index(std::size_t out, std::span<const std::size_t> inputs) const {
  if (inputs.size() != arity_ || out >= dim_) throw ShapeError("index shape does not match the map");
  for (auto j : inputs)
    if (j >= dim_) throw ShapeError("input index out of range");
  return out * input_count_ + encode(inputs, dim_);
}

const Rational& MultilinearMap::at(std::size_t out, std::span<const std::size_t> inputs) const {
  return coeffs_[flat_index(out, inputs)];
}

Rational& MultilinearMap::at(std::size_t out, std::span<const std::size_t> inputs) {
  return coeffs_[flat_index(out, inputs)];
}

bool MultilinearMap::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

MultilinearMap compose_endo(const MultilinearMap& f, std::span<const MultilinearMap> args) {
  require_dims(f, args);
  const std::size_t d = f.dim();
  const std::size_t n = f.arity();
  std::size_t total = 0;
  for (const auto& g : args) total += g.arity();
  MultilinearMap out(d, total);

  const long inputs = static_cast<long>(out.input_count());
  const std::size_t outer_count = f.input_count();
#pragma omp parallel
  {
    std::vector<std::size_t> digits(total);
    std::vector<std::size_t> outer(n);
    std::vector<std::size_t> block_flat(n);
    std::vector<Rational> acc(d);
#pragma omp for schedule(static)
    for (long J = 0; J < inputs; ++J) {
      decode(static_cast<std::size_t>(J), d, digits);
      std::size_t pos = 0;
      for (std::size_t i = 0; i < n; ++i) {
        block_flat[i] = encode(std::span(digits).subspan(pos, args[i].arity()), d);
        pos += args[i].arity();
      }
      for (auto& a : acc) a = Rational(0);
      // Σ over outer indices a: f[o; a] Π_i args[i][a_i; block_i].
      for (std::size_t a = 0; a < outer_count; ++a) {
        decode(a, d, outer);
        Rational prod(1);
        for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod *= args[i].at_flat(outer[i], block_flat[i]);
        if (prod.is_zero()) continue;
        for (std::size_t o = 0; o < d; ++o) {
          const Rational& c = f.at_flat(o, a);
          if (!c.is_zero()) acc[o] += c * prod;
        }
      }
      for (std::size_t o = 0; o < d; ++o) out.at_flat(o, static_cast<std::size_t>(J)) = acc[o];
    }
  }
  return out;
}

MultilinearMap compose_endo_reference(const MultilinearMap& f, std::span<const MultilinearMap> args) {
  require_dims(f, args);
  const std::size_t d = f.dim();
  std::size_t total = 0;
  for (const auto& g : args) total += g.arity();
  std::vector<Rational> coeffs(d * [&] {
    std::size_t c = 1;
    for (std::size_t k = 0; k < total; ++k) c *= d;
    return c;
  }());
  const std::size_t inputs = coeffs.size() / d;
  std::vector<std::size_t> digits(total);
  for (std::size_t J = 0; J < inputs; ++J) {
    decode(J, d, digits);
    std::vector<DenseVector> values;
    std::size_t pos = 0;
    for (const auto& g : args) {
      std::vector<DenseVector> basis_inputs;
      for (std::size_t k = 0; k < g.arity(); ++k) {
        DenseVector e(d);
        e[digits[pos + k]] = Rational(1);
        basis_inputs.push_back(std::move(e));
      }
      pos += g.arity();
      values.push_back(evaluate(g, basis_inputs));
    }
    DenseVector y = evaluate(f, values);
    for (std::size_t o = 0; o < d; ++o) coeffs[o * inputs + J] = y[o];
  }
  return MultilinearMap(d, total, std::move(coeffs));
}

MultilinearMap act_endo(const MultilinearMap& f, const Permutation& s) {
  if (s.degree() != f.arity())
    throw ShapeError("permutation of degree " + std::to_string(s.degree()) + " acting on a map of arity " +
                     std::to_string(f.arity()));
  const std::size_t d = f.dim();
  const std::size_t n = f.arity();
  const Permutation s_inv = inverse(s);
  MultilinearMap out(d, n);
  std::vector<std::size_t> j(n), src(n);
  for (std::size_t J = 0; J < f.input_count(); ++J) {
    decode(J, d, j);
    for (std::size_t k = 0; k < n; ++k) src[k] = j[static_cast<std::size_t>(s_inv(static_cast<int>(k + 1)) - 1)];
    const std::size_t from = encode(src, d);
    for (std::size_t o = 0; o < d; ++o) out.at_flat(o, J) = f.at_flat(o, from);
  }
  return out;
}

DenseVector evaluate(const MultilinearMap& f, std::span<const DenseVector> inputs) {
  if (inputs.size() != f.arity())
    throw ShapeError("map of arity " + std::to_string(f.arity()) + " applied to " + std::to_string(inputs.size()) +
                     " inputs");
  const std::size_t d = f.dim();
  for (const auto& v : inputs)
    if (v.size() != d)
      throw ShapeError("input of length " + std::to_string(v.size()) + " for a map on dimension " + std::to_string(d));
  DenseVector out(d);
  std::vector<std::size_t> j(f.arity());
  for (std::size_t J = 0; J < f.input_count(); ++J) {
    decode(J, d, j);
    Rational prod(1);
    for (std::size_t k = 0; k < j.size() && !prod.is_zero(); ++k) prod *= inputs[k][j[k]];
    if (prod.is_zero()) continue;
    for (std::size_t o = 0; o < d; ++o) {
      const Rational& c = f.at_flat(o, J);
      if (!c.is_zero()) out[o] += c * prod;
    }
  }
  return out;
}

}  // namespace operad
