#include "operad/free_operad.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "operad/error.hpp"

namespace operad {

std::string to_string(Mode mode) { return mode == Mode::planar ? "planar" : "symmetric"; }

Signature::Signature(std::vector<Generator> generators, Mode mode) : generators_(std::move(generators)), mode_(mode) {
  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw ShapeError("generator with empty name");
    if (g.name == "id") throw ShapeError("generator name 'id' is reserved for the unit");
    if (!names.insert(g.name).second) throw ShapeError("duplicate generator '" + g.name + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

bool Signature::finite_components() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Generator& g) { return g.arity >= 2; });
}

SignaturePtr make_signature(std::vector<Generator> generators, Mode mode) {
  return std::make_shared<const Signature>(std::move(generators), mode);
}

Term::Term(SignaturePtr signature, OperadTree shape, std::vector<std::size_t> decoration, std::vector<int> labels)
    : signature_(std::move(signature)),
      shape_(std::make_shared<const OperadTree>(std::move(shape))),
      decoration_(std::move(decoration)),
      labels_(std::move(labels)) {
  if (!signature_) throw ShapeError("term without signature");
  if (decoration_.size() != shape_->vertex_count()) throw ShapeError("decoration does not cover every vertex");
  for (std::size_t v = 0; v < decoration_.size(); ++v) {
    if (decoration_[v] >= signature_->generators().size()) throw ShapeError("decoration outside the signature");
    const auto& g = signature_->generator(decoration_[v]);
    if (g.arity != shape_->arity(v))
      throw ShapeError("generator '" + g.name + "' has arity " + std::to_string(g.arity) + " but its vertex has " +
                       std::to_string(shape_->arity(v)) + " inputs");
  }
  if (labels_.size() != shape_->leaf_count()) throw ShapeError("label word does not match leaf count");
  std::vector<bool> seen(labels_.size() + 1, false);
  for (std::size_t p = 0; p < labels_.size(); ++p) {
    const int l = labels_[p];
    if (l < 1 || static_cast<std::size_t>(l) > labels_.size() || seen[static_cast<std::size_t>(l)])
      throw ShapeError("leaf labels are not a bijection of {1.." + std::to_string(labels_.size()) + "}");
    seen[static_cast<std::size_t>(l)] = true;
    if (signature_->mode() == Mode::planar && l != static_cast<int>(p + 1))
      throw ShapeError("planar terms carry labels 1..n in order");
  }

  key_.reserve(decoration_.size() + labels_.size());
  if (shape_->is_trivial()) {
    key_.push_back(-labels_[0]);
    return;
  }
  // Preorder walk; vertex ids are already preorder so a stack suffices.
  std::vector<OperadTree::Input> stack{0};
  while (!stack.empty()) {
    auto in = stack.back();
    stack.pop_back();
    if (OperadTree::is_leaf(in)) {
      key_.push_back(-labels_[OperadTree::leaf_index(in)]);
      continue;
    }
    const auto v = static_cast<std::size_t>(in);
    key_.push_back(static_cast<int>(decoration_[v]) + 1);
    auto inputs = shape_->inputs(v);
    for (auto it = inputs.rbegin(); it != inputs.rend(); ++it) stack.push_back(*it);
  }
}

Term Term::unit(SignaturePtr signature) { return Term(std::move(signature), OperadTree::trivial(), {}, {1}); }

std::vector<int> Term::input_positions() const {
  std::vector<int> out(labels_.size());
  for (std::size_t p = 0; p < labels_.size(); ++p) out[static_cast<std::size_t>(labels_[p] - 1)] = static_cast<int>(p + 1);
  return out;
}

Term gen_corolla(const SignaturePtr& signature, std::string_view name) {
  auto idx = signature->find(name);
  if (!idx) throw ShapeError("unknown generator '" + std::string(name) + "'");
  const std::size_t n = signature->generator(*idx).arity;
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return Term(signature, OperadTree::corolla(n), {*idx}, std::move(labels));
}

namespace {

void require_same_signature(const Term& a, const Term& b) {
  if (a.signature_ptr() != b.signature_ptr() && !(a.signature() == b.signature()))
    throw ShapeError("terms over different signatures");
}

}  // namespace

Term gamma(const Term& host, std::span<const Term> args) {
  if (args.size() != host.arity())
    throw ShapeError("composition needs " + std::to_string(host.arity()) + " arguments, got " +
                     std::to_string(args.size()));
  for (const auto& a : args) require_same_signature(host, a);

  std::vector<int> offset(args.size() + 1, 0);
  for (std::size_t i = 0; i < args.size(); ++i) offset[i + 1] = offset[i] + static_cast<int>(args[i].arity());

  // Argument grafted at each host leaf position.
  const auto& host_labels = host.labels();
  std::vector<OperadTree> positional;
  positional.reserve(args.size());
  for (int l : host_labels) positional.push_back(args[static_cast<std::size_t>(l - 1)].shape());

  auto traced = OperadTree::graft_traced(host.shape(), positional);

  std::vector<std::size_t> decoration;
  decoration.reserve(traced.vertex_origin.size());
  for (const auto& o : traced.vertex_origin) {
    if (o.source < 0)
      decoration.push_back(host.decoration()[o.index]);
    else
      decoration.push_back(args[static_cast<std::size_t>(host_labels[static_cast<std::size_t>(o.source)] - 1)]
                               .decoration()[o.index]);
  }
  std::vector<int> labels;
  labels.reserve(traced.leaf_origin.size());
  for (const auto& o : traced.leaf_origin) {
    const auto a = static_cast<std::size_t>(host_labels[static_cast<std::size_t>(o.source)] - 1);
    labels.push_back(offset[a] + args[a].labels()[o.index]);
  }
  return Term(host.signature_ptr(), std::move(traced.tree), std::move(decoration), std::move(labels));
}

Term circ(const Term& host, std::size_t i, const Term& arg) {
  if (i < 1 || i > host.arity())
    throw ShapeError("partial composition index " + std::to_string(i) + " outside 1.." + std::to_string(host.arity()));
  std::vector<Term> args(host.arity(), Term::unit(host.signature_ptr()));
  args[i - 1] = arg;
  return gamma(host, args);
}

Term act(const Term& t, const Permutation& s) {
  if (t.signature().mode() == Mode::planar) throw UnsupportedError("planar operads carry no symmetric action");
  if (s.degree() != t.arity())
    throw ShapeError("permutation of degree " + std::to_string(s.degree()) + " acting on a term of arity " +
                     std::to_string(t.arity()));
  const Permutation s_inv = inverse(s);
  std::vector<int> labels = t.labels();
  for (int& l : labels) l = s_inv(l);
  return Term(t.signature_ptr(), t.shape(), t.decoration(), std::move(labels));
}

namespace {

// Planar decorated trees with n leaves, labels 1..n, in construction order.
class ShapeEnumerator {
 public:
  explicit ShapeEnumerator(SignaturePtr sig) : sig_(std::move(sig)), planar_(make_signature(sig_->generators(), Mode::planar)) {}

  const std::vector<Term>& shapes(std::size_t n) {
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    std::vector<Term> out;
    if (n == 1) out.push_back(Term::unit(planar_));
    for (std::size_t g = 0; g < sig_->generators().size(); ++g) {
      const std::size_t k = sig_->generator(g).arity;
      if (k < 2 || k > n) continue;
      const Term corolla = gen_corolla(planar_, sig_->generator(g).name);
      std::vector<Term> args;
      fill(corolla, k, n, args, out);
    }
    return memo_.emplace(n, std::move(out)).first->second;
  }

 private:
  void fill(const Term& corolla, std::size_t k, std::size_t remaining, std::vector<Term>& args, std::vector<Term>& out) {
    const std::size_t slots_left = k - args.size();
    if (slots_left == 0) {
      if (remaining == 0) out.push_back(gamma(corolla, args));
      return;
    }
    for (std::size_t m = 1; m + (slots_left - 1) <= remaining; ++m) {
      // Copy: the recursive call may grow memo_ and invalidate references.
      const std::vector<Term> sub = shapes(m);
      for (const auto& s : sub) {
        args.push_back(s);
        fill(corolla, k, remaining - m, args, out);
        args.pop_back();
      }
    }
  }

  SignaturePtr sig_;
  SignaturePtr planar_;
  std::map<std::size_t, std::vector<Term>> memo_;
};

void require_finite(const Signature& signature, std::size_t n) {
  if (!signature.finite_components())
    throw UnsupportedError("basis enumeration needs every generator arity >= 2 (0-ary and 1-ary generators make "
                           "components infinite)");
  if (n < 1) throw UnsupportedError("basis enumeration needs arity >= 1");
}

}  // namespace

std::size_t basis_size(const Signature& signature, std::size_t n) {
  require_finite(signature, n);
  // count[m] = number of planar decorated trees with m leaves.
  std::vector<std::size_t> count(n + 1, 0);
  count[1] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    for (const auto& g : signature.generators()) {
      // ways[j][s]: j children with s leaves total.
      std::vector<std::size_t> ways(m + 1, 0);
      ways[0] = 1;
      for (std::size_t j = 0; j < g.arity; ++j) {
        std::vector<std::size_t> next(m + 1, 0);
        for (std::size_t s = 0; s <= m; ++s)
          if (ways[s])
            for (std::size_t c = 1; s + c <= m; ++c) next[s + c] += ways[s] * count[c];
        ways = std::move(next);
      }
      count[m] += ways[m];
    }
  }
  std::size_t total = count[n];
  if (signature.mode() == Mode::symmetric)
    for (std::size_t k = 2; k <= n; ++k) total *= k;
  return total;
}

std::vector<Term> enumerate_basis(const SignaturePtr& signature, std::size_t n) {
  require_finite(*signature, n);
  ShapeEnumerator shapes(signature);
  std::vector<Term> out;
  for (const auto& s : shapes.shapes(n)) {
    if (signature->mode() == Mode::planar) {
      out.emplace_back(signature, s.shape(), s.decoration(), s.labels());
      continue;
    }
    for (const auto& p : all_permutations(n)) out.emplace_back(signature, s.shape(), s.decoration(), p.word());
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinComb::LinComb(const Term& t, const Rational& c) { add(t, c); }

void LinComb::add(const Term& t, const Rational& c) {
  if (arity_ && *arity_ != t.arity())
    throw ShapeError("linear combination mixes arities " + std::to_string(*arity_) + " and " +
                     std::to_string(t.arity()));
  arity_ = t.arity();
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LinComb& LinComb::operator+=(const LinComb& other) {
  if (other.arity_ && arity_ && *other.arity_ != *arity_)
    throw ShapeError("linear combination mixes arities " + std::to_string(*arity_) + " and " +
                     std::to_string(*other.arity_));
  if (!arity_) arity_ = other.arity_;
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& other) { return *this += other.scaled(Rational(-1)); }

LinComb LinComb::scaled(const Rational& c) const {
  LinComb out;
  out.arity_ = arity_;
  if (c.is_zero()) return out;
  for (const auto& [t, v] : terms_) out.terms_.emplace(t, v * c);
  return out;
}

Rational LinComb::coefficient(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

LinComb lin_gamma(const LinComb& host, std::span<const LinComb> args) {
  LinComb out;
  std::vector<Term> chosen;
  std::function<void(const Term&, const Rational&, std::size_t)> expand = [&](const Term& h, const Rational& c,
                                                                           std::size_t i) {
    if (i == args.size()) {
      out.add(gamma(h, chosen), c);
      return;
    }
    for (const auto& [t, v] : args[i].terms()) {
      chosen.push_back(t);
      expand(h, c * v, i + 1);
      chosen.pop_back();
    }
  };
  for (const auto& [h, c] : host.terms()) {
    if (args.size() != h.arity())
      throw ShapeError("composition needs " + std::to_string(h.arity()) + " arguments, got " +
                       std::to_string(args.size()));
    expand(h, c, 0);
  }
  return out;
}

LinComb lin_circ(const LinComb& host, std::size_t i, const LinComb& arg) {
  LinComb out;
  for (const auto& [h, c] : host.terms())
    for (const auto& [a, v] : arg.terms()) out.add(circ(h, i, a), c * v);
  return out;
}

LinComb lin_act(const LinComb& v, const Permutation& s) {
  LinComb out;
  for (const auto& [t, c] : v.terms()) out.add(act(t, s), c);
  return out;
}

}  // namespace operad
