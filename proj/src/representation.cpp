#include "operad/representation.hpp"

#include <functional>
#include <sstream>

#include "operad/error.hpp"

namespace operad {

Representation::Representation(std::shared_ptr<const Presentation> presentation, std::size_t dim,
                               std::map<std::string, MultilinearMap> images)
    : presentation_(std::move(presentation)), dim_(dim), images_(std::move(images)) {
  const auto& sig = *presentation_->signature();
  for (const auto& [name, map] : images_) {
    auto idx = sig.find(name);
    if (!idx) throw ShapeError("image given for foreign generator '" + name + "'");
    if (map.dim() != dim_ || map.arity() != sig.generator(*idx).arity)
      throw ShapeError("image of '" + name + "' must have arity " + std::to_string(sig.generator(*idx).arity) +
                       " on a space of dimension " + std::to_string(dim_));
  }
  for (const auto& g : sig.generators())
    if (!images_.count(g.name)) throw ShapeError("generator '" + g.name + "' has no image");
}

const MultilinearMap& Representation::image(std::string_view generator) const {
  auto it = images_.find(std::string(generator));
  if (it == images_.end()) throw ShapeError("foreign generator '" + std::string(generator) + "'");
  return it->second;
}

namespace {

std::string witness_string(std::size_t out, std::size_t input_flat, std::size_t dim, std::size_t arity) {
  std::vector<std::size_t> digits(arity);
  for (std::size_t k = arity; k-- > 0;) {
    digits[k] = input_flat % dim;
    input_flat /= dim;
  }
  std::ostringstream os;
  os << '[' << out + 1 << ';';
  for (std::size_t k = 0; k < arity; ++k) os << (k ? "," : "") << digits[k] + 1;
  os << ']';
  return os.str();
}

void require_signature(const Representation& r, const Term& t) {
  if (!(t.signature() == *r.presentation().signature()))
    throw ShapeError("term is not over the representation's signature");
}

}  // namespace

MultilinearMap derived_map(const Representation& r, const Term& t) {
  require_signature(r, t);
  if (t.is_unit()) return MultilinearMap::identity(r.dim());
  const auto& shape = t.shape();
  const auto& sig = t.signature();
  const MultilinearMap id = MultilinearMap::identity(r.dim());
  std::function<MultilinearMap(std::size_t)> eval = [&](std::size_t v) {
    std::vector<MultilinearMap> children;
    for (auto in : shape.inputs(v)) children.push_back(OperadTree::is_leaf(in) ? id : eval(static_cast<std::size_t>(in)));
    return compose_endo(r.image(sig.generator(t.decoration()[v]).name), children);
  };
  MultilinearMap planar = eval(0);
  if (t.arity() == 0) return planar;
  // planar reads inputs in leaf order; the term reads x_{labels[p]} at leaf p.
  return act_endo(planar, inverse(Permutation(t.labels())));
}

MultilinearMap derived_map(const Representation& r, const LinComb& v) {
  if (!v.arity()) throw ShapeError("the empty combination has no arity");
  MultilinearMap out(r.dim(), *v.arity());
  for (const auto& [t, c] : v.terms()) {
    MultilinearMap m = derived_map(r, t);
    for (std::size_t k = 0; k < m.coeffs().size(); ++k)
      if (!m.coeffs()[k].is_zero()) out.at_flat(0, k) += c * m.coeffs()[k];
  }
  return out;
}

Verdict check_relations(const Representation& r) {
  for (const auto& rel : r.presentation().relations()) {
    MultilinearMap m = derived_map(r, rel.element);
    for (std::size_t k = 0; k < m.coeffs().size(); ++k) {
      if (m.coeffs()[k].is_zero()) continue;
      return {false, rel.name, witness_string(k / m.input_count(), k % m.input_count(), m.dim(), m.arity())};
    }
  }
  return Verdict::ok();
}

namespace {

const Generator& single_binary(const Presentation& p) {
  const Generator* found = nullptr;
  std::size_t count = 0;
  for (const auto& g : p.signature()->generators())
    if (g.arity == 2) {
      found = &g;
      ++count;
    }
  if (count != 1)
    throw ShapeError("presentation '" + p.name() + "' has " + std::to_string(count) + " binary generators, expected 1");
  return *found;
}

}  // namespace

Representation rep_from_binary(std::shared_ptr<const Presentation> p, const MultilinearMap& m) {
  if (m.arity() != 2) throw ShapeError("expected a binary map, got arity " + std::to_string(m.arity()));
  const auto& g = single_binary(*p);
  std::map<std::string, MultilinearMap> images{{g.name, m}};
  return Representation(std::move(p), m.dim(), std::move(images));
}

MultilinearMap binary_from_rep(const Representation& r) { return r.image(single_binary(r.presentation()).name); }

LinearMap LinearMap::identity(std::size_t dim) {
  LinearMap f = zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) f.entries[i * dim + i] = Rational(1);
  return f;
}

LinearMap LinearMap::zero(std::size_t domain, std::size_t codomain) {
  return LinearMap{domain, codomain, std::vector<Rational>(domain * codomain)};
}

Verdict is_algebra_morphism(const LinearMap& f, const Representation& v, const Representation& w) {
  if (!(*v.presentation().signature() == *w.presentation().signature()))
    throw ShapeError("representations of different operads");
  if (f.domain != v.dim() || f.codomain != w.dim() || f.entries.size() != f.domain * f.codomain)
    throw ShapeError("linear map shape does not match the representations");
  const std::size_t dv = v.dim();
  const std::size_t dw = w.dim();
  for (const auto& g : v.presentation().signature()->generators()) {
    const MultilinearMap& phi_v = v.image(g.name);
    const MultilinearMap& phi_w = w.image(g.name);
    const std::size_t k = g.arity;
    std::vector<std::size_t> j(k), b(k);
    for (std::size_t J = 0; J < phi_v.input_count(); ++J) {
      std::size_t rest = J;
      for (std::size_t m = k; m-- > 0;) {
        j[m] = rest % dv;
        rest /= dv;
      }
      for (std::size_t i = 0; i < dw; ++i) {
        Rational lhs(0);
        for (std::size_t a = 0; a < dv; ++a) lhs += f.at(i, a) * phi_v.at_flat(a, J);
        Rational rhs(0);
        for (std::size_t B = 0; B < phi_w.input_count(); ++B) {
          std::size_t rb = B;
          for (std::size_t m = k; m-- > 0;) {
            b[m] = rb % dw;
            rb /= dw;
          }
          Rational prod = phi_w.at_flat(i, B);
          for (std::size_t m = 0; m < k && !prod.is_zero(); ++m) prod *= f.at(b[m], j[m]);
          rhs += prod;
        }
        if (lhs != rhs) return {false, g.name, witness_string(i, J, dv, k)};
      }
    }
  }
  return Verdict::ok();
}

namespace {

MultilinearMap binary(std::size_t dim, const std::function<DenseVector(std::size_t, std::size_t)>& table) {
  MultilinearMap m(dim, 2);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      DenseVector v = table(a, b);
      for (std::size_t o = 0; o < dim; ++o) m.at_flat(o, a * dim + b) = v[o];
    }
  return m;
}

DenseVector unit_vector(std::size_t dim, std::size_t i) {
  DenseVector v(dim);
  v[i] = Rational(1);
  return v;
}

std::map<std::string, AlgebraSpec> make_builtins() {
  std::map<std::string, AlgebraSpec> out;
  // e_a × e_b = Σ_c ε_{abc} e_c.
  out["cross3"] = {"cross3", 3, {{"product", binary(3, [](std::size_t a, std::size_t b) {
                                    DenseVector v(3);
                                    if (a == b) return v;
                                    const std::size_t c = 3 - a - b;
                                    const bool even = (b == (a + 1) % 3);
                                    v[c] = Rational(even ? 1 : -1);
                                    return v;
                                  })}}};
  // Basis E11, E12, E21, E22 (index 2*row + col); E_ij E_kl = δ_jk E_il.
  out["mat2"] = {"mat2", 4,
                 {{"product", binary(4, [](std::size_t a, std::size_t b) {
                     DenseVector v(4);
                     if (a % 2 == b / 2) v[2 * (a / 2) + b % 2] = Rational(1);
                     return v;
                   })},
                  {"unit", MultilinearMap::constant({Rational(1), Rational(0), Rational(0), Rational(1)})}}};
  // Bilinear extension of subtraction on basis vectors: e_a · e_b = e_a - e_b.
  out["sub"] = {"sub", 2, {{"product", binary(2, [](std::size_t a, std::size_t b) {
                              DenseVector v = unit_vector(2, a);
                              v[b] -= Rational(1);
                              return v;
                            })}}};
  out["zero"] = {"zero", 2, {{"product", MultilinearMap(2, 2)}}};
  out["scalar"] = {"scalar", 1,
                   {{"product", binary(1, [](std::size_t, std::size_t) { return unit_vector(1, 0); })},
                    {"unit", MultilinearMap::constant({Rational(1)})}}};
  return out;
}

const std::map<std::string, AlgebraSpec>& builtins() {
  static const auto table = make_builtins();
  return table;
}

}  // namespace

const AlgebraSpec& builtin_algebra(std::string_view name) {
  auto it = builtins().find(std::string(name));
  if (it == builtins().end()) throw ShapeError("unknown algebra '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> builtin_algebra_names() {
  std::vector<std::string> names;
  for (const auto& [name, spec] : builtins()) names.push_back(name);
  return names;
}

Representation rep_from_algebra(std::shared_ptr<const Presentation> p, const AlgebraSpec& algebra) {
  std::map<std::string, MultilinearMap> images;
  for (const auto& g : p->signature()->generators()) {
    const char* role = g.arity == 2 ? "product" : (g.arity == 0 ? "unit" : nullptr);
    auto it = role ? algebra.structure.find(role) : algebra.structure.end();
    if (it == algebra.structure.end())
      throw ShapeError("algebra '" + algebra.name + "' has no structure map for generator '" + g.name + "'");
    images.emplace(g.name, it->second);
  }
  return Representation(std::move(p), algebra.dim, std::move(images));
}

}  // namespace operad
