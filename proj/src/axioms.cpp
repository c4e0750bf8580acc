#include "operad/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "operad/error.hpp"
#include "operad/termio.hpp"

namespace operad {

TermOps TermOps::standard() {
  return {[](const Term& h, std::span<const Term> a) { return operad::gamma(h, a); },
          [](const Term& h, std::size_t i, const Term& a) { return operad::circ(h, i, a); },
          [](const Term& t, const Permutation& s) { return operad::act(t, s); }};
}

Permutation random_permutation(std::size_t degree, Rng& rng) {
  std::vector<int> word(degree);
  std::iota(word.begin(), word.end(), 1);
  std::shuffle(word.begin(), word.end(), rng);
  return Permutation(std::move(word));
}

namespace {

std::size_t uniform(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

constexpr std::size_t kShallow = 6;

/// Which arities the signature can realize, and how to split leaves among
/// children so every child stays realizable.
class TermSampler {
 public:
  TermSampler(const SignaturePtr& sig, std::size_t limit) : sig_(sig), limit_(limit), feasible_(limit + 1, false) {
    for (const auto& g : sig->generators()) {
      max_gen_arity_ = std::max(max_gen_arity_, g.arity);
      if (g.arity == 0) nullary_ = true;
    }
    feasible_[1] = true;
    feasible_[0] = nullary_;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t k = 0; k <= limit_; ++k) {
        if (feasible_[k]) continue;
        for (const auto& g : sig->generators())
          if (g.arity > 0 && splits(g.arity, k, false)) {
            feasible_[k] = true;
            changed = true;
            break;
          }
      }
    }
  }

  bool feasible(std::size_t k) const { return k <= limit_ && feasible_[k]; }
  bool has_nullary() const { return nullary_; }

  Term sample(std::size_t n, Rng& rng) {
    if (!feasible(n)) throw UnsupportedError("signature has no term of arity " + std::to_string(n));
    if (n == 1 && uniform(0, 2, rng) == 0) return Term::unit(sig_);
    TreeBuilder builder;
    std::vector<std::size_t> decoration;
    if (n == 1 && !has_root_for(1, 0)) return Term::unit(sig_);
    grow(n, std::nullopt, 0, builder, decoration, rng);
    OperadTree shape = builder.finish();
    std::vector<int> labels(shape.leaf_count());
    std::iota(labels.begin(), labels.end(), 1);
    if (sig_->mode() == Mode::symmetric) std::shuffle(labels.begin(), labels.end(), rng);
    return Term(sig_, std::move(shape), std::move(decoration), std::move(labels));
  }

 private:
  /// Can k leaves be split among a children, each realizable? `positive`
  /// forbids empty children.
  bool splits(std::size_t a, std::size_t k, bool positive) const {
    // reach[c] for the current number of children.
    std::vector<bool> reach(k + 1, false);
    reach[0] = true;
    for (std::size_t child = 0; child < a; ++child) {
      std::vector<bool> next(k + 1, false);
      for (std::size_t done = 0; done <= k; ++done) {
        if (!reach[done]) continue;
        for (std::size_t s = positive ? 1 : 0; done + s <= k; ++s)
          if (feasible_[s]) next[done + s] = true;
      }
      reach.swap(next);
    }
    return reach[k];
  }

  bool usable(const Generator& g, std::size_t k, std::size_t depth) const {
    const bool deep = depth >= kShallow;
    if (g.arity == 0) return k == 0;
    if (k == 0) return !deep && splits(g.arity, 0, false);
    if (g.arity == 1) return !deep && feasible_[k];
    return splits(g.arity, k, deep);
  }

  bool has_root_for(std::size_t k, std::size_t depth) const {
    for (const auto& g : sig_->generators())
      if (usable(g, k, depth)) return true;
    return false;
  }

  void grow(std::size_t k, std::optional<std::size_t> parent, std::size_t depth, TreeBuilder& builder,
            std::vector<std::size_t>& decoration, Rng& rng) {
    const bool deep = depth >= kShallow;
    if (parent && k == 1 && (deep || uniform(0, 1, rng) == 0 || !has_root_for(1, depth))) {
      builder.add_leaf(*parent);
      return;
    }
    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < sig_->generators().size(); ++g)
      if (usable(sig_->generator(g), k, depth)) candidates.push_back(g);
    if (candidates.empty()) {
      builder.add_leaf(*parent);
      return;
    }
    const std::size_t g = candidates[uniform(0, candidates.size() - 1, rng)];
    const std::size_t v = builder.open_vertex();
    if (parent) builder.add_child(*parent, v);
    decoration.push_back(g);
    const std::size_t a = sig_->generator(g).arity;
    std::size_t left = k;
    for (std::size_t child = 0; child < a; ++child) {
      const std::size_t rest = a - child - 1;
      std::vector<std::size_t> sizes;
      for (std::size_t s = deep ? 1 : 0; s <= left; ++s)
        if (feasible_[s] && splits(rest, left - s, deep)) sizes.push_back(s);
      const std::size_t s = sizes[uniform(0, sizes.size() - 1, rng)];
      grow(s, v, depth + 1, builder, decoration, rng);
      left -= s;
    }
  }

  SignaturePtr sig_;
  std::size_t limit_;
  std::vector<bool> feasible_;
  std::size_t max_gen_arity_ = 0;
  bool nullary_ = false;
};

constexpr std::size_t kTermLimit = 32;

}  // namespace

Term random_term(const SignaturePtr& signature, std::size_t n, Rng& rng) {
  return TermSampler(signature, std::max(n, kTermLimit)).sample(n, rng);
}

MultilinearMap random_map(std::size_t dim, std::size_t arity, Rng& rng) {
  MultilinearMap m(dim, arity);
  for (std::size_t o = 0; o < dim; ++o)
    for (std::size_t j = 0; j < m.input_count(); ++j)
      if (uniform(0, 1, rng)) m.at_flat(o, j) = Rational(static_cast<long>(uniform(0, 4, rng)) - 2);
  return m;
}

namespace {

struct TermModel {
  using Elem = Term;
  SignaturePtr sig;
  const TermOps& ops;
  std::size_t max_arity;
  TermSampler sampler;
  std::size_t budget = kTermLimit;

  TermModel(const SignaturePtr& s, const TermOps& o, std::size_t m)
      : sig(s), ops(o), max_arity(m), sampler(s, kTermLimit) {}

  bool feasible(std::size_t k) const { return sampler.feasible(k); }
  Term random(std::size_t n, Rng& rng) { return sampler.sample(n, rng); }
  std::size_t arity(const Term& t) const { return t.arity(); }
  Term unit() const { return Term::unit(sig); }
  Term gamma(const Term& h, std::span<const Term> a) const { return ops.gamma(h, a); }
  Term circ(const Term& h, std::size_t i, const Term& a) const { return ops.circ(h, i, a); }
  Term act(const Term& t, const Permutation& s) const { return ops.act(t, s); }
  std::string show(const Term& t) const { return print_term(t); }
};

struct EndoModel {
  using Elem = MultilinearMap;
  std::size_t dim;
  std::size_t max_arity;
  std::size_t budget = 6;

  bool feasible(std::size_t) const { return true; }
  MultilinearMap random(std::size_t n, Rng& rng) const { return random_map(dim, n, rng); }
  std::size_t arity(const MultilinearMap& f) const { return f.arity(); }
  MultilinearMap unit() const { return MultilinearMap::identity(dim); }
  MultilinearMap gamma(const MultilinearMap& h, std::span<const MultilinearMap> a) const { return compose_endo(h, a); }
  MultilinearMap circ(const MultilinearMap& h, std::size_t i, const MultilinearMap& a) const {
    std::vector<MultilinearMap> args(h.arity(), unit());
    args.at(i - 1) = a;
    return compose_endo(h, args);
  }
  MultilinearMap act(const MultilinearMap& f, const Permutation& s) const { return act_endo(f, s); }
  std::string show(const MultilinearMap& f) const {
    return "map(dim " + std::to_string(f.dim()) + ", arity " + std::to_string(f.arity()) + ")";
  }
};

/// The laws, written once for any model with gamma, circ, act and unit.
template <class M>
class Laws {
 public:
  using E = typename M::Elem;

  Laws(M& m, Rng& rng, std::size_t min_arity) : m_(m), rng_(rng), lo_(min_arity) {}

  CaseResult associativity() {
    auto l = draw(1, m_.max_arity);
    if (!l) return std::nullopt;
    std::vector<std::size_t> ms, ns;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 50) return std::nullopt;
      ms = draws(*l, lo_, 2);
      const std::size_t total = sum(ms);
      ns = draws(total, lo_, 2);
      if (ms.size() == *l && ns.size() == total && total <= m_.budget && sum(ns) <= m_.budget) break;
    }
    E lambda = m_.random(*l, rng_);
    std::vector<E> mu = randoms(ms), nu = randoms(ns);
    E lhs = m_.gamma(m_.gamma(lambda, mu), nu);
    std::vector<E> inner;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      std::span<const E> block(nu.data() + offset, ms[i]);
      inner.push_back(m_.gamma(mu[i], block));
      offset += ms[i];
    }
    E rhs = m_.gamma(lambda, inner);
    if (lhs == rhs) return std::nullopt;
    return "associativity fails for host " + m_.show(lambda);
  }

  CaseResult partial_sequential() {
    auto l = draw(1, m_.max_arity), m = draw(1, m_.max_arity), n = draw(lo_, m_.max_arity);
    if (!l || !m || !n || *l + *m + *n > m_.budget + 2) return std::nullopt;
    E lambda = m_.random(*l, rng_), mu = m_.random(*m, rng_), nu = m_.random(*n, rng_);
    const std::size_t i = uniform(1, *l, rng_), j = uniform(1, *m, rng_);
    E lhs = m_.circ(m_.circ(lambda, i, mu), i + j - 1, nu);
    E rhs = m_.circ(lambda, i, m_.circ(mu, j, nu));
    if (lhs == rhs) return std::nullopt;
    return "sequential law fails: (" + m_.show(lambda) + " o_" + std::to_string(i) + " " + m_.show(mu) + ") o_" +
           std::to_string(i + j - 1) + " " + m_.show(nu);
  }

  CaseResult partial_parallel() {
    auto l = draw(2, m_.max_arity), m = draw(lo_, m_.max_arity), n = draw(lo_, m_.max_arity);
    if (!l || !m || !n || *l + *m + *n > m_.budget + 2) return std::nullopt;
    E lambda = m_.random(*l, rng_), mu = m_.random(*m, rng_), nu = m_.random(*n, rng_);
    const std::size_t k = uniform(2, *l, rng_), i = uniform(1, k - 1, rng_);
    E lhs = m_.circ(m_.circ(lambda, i, mu), k - 1 + *m, nu);
    E rhs = m_.circ(m_.circ(lambda, k, nu), i, mu);
    if (lhs == rhs) return std::nullopt;
    return "parallel law fails: host " + m_.show(lambda) + ", i=" + std::to_string(i) + ", k=" + std::to_string(k);
  }

  CaseResult unit() {
    auto n = draw(lo_, m_.max_arity);
    if (!n) return std::nullopt;
    E t = m_.random(*n, rng_);
    const E id = m_.unit();
    std::vector<E> single{t};
    if (!(m_.gamma(id, single) == t)) return "gamma(id; t) != t for " + m_.show(t);
    std::vector<E> ids(*n, id);
    if (!(m_.gamma(t, ids) == t)) return "gamma(t; id..id) != t for " + m_.show(t);
    if (!(m_.circ(id, 1, t) == t)) return "id o_1 t != t for " + m_.show(t);
    if (*n > 0) {
      const std::size_t i = uniform(1, *n, rng_);
      if (!(m_.circ(t, i, id) == t)) return "t o_" + std::to_string(i) + " id != t for " + m_.show(t);
    }
    return std::nullopt;
  }

  CaseResult equivariance() {
    auto n = draw(1, m_.max_arity);
    if (!n) return std::nullopt;
    std::vector<std::size_t> ks;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 50) return std::nullopt;
      ks = draws(*n, 1, 2);
      if (ks.size() == *n && sum(ks) <= m_.budget) break;
    }
    E theta = m_.random(*n, rng_);
    std::vector<E> phi = randoms(ks);
    const Permutation sigma = random_permutation(*n, rng_);
    std::vector<Permutation> pi;
    for (auto k : ks) pi.push_back(random_permutation(k, rng_));

    std::vector<E> acted;
    std::vector<Permutation> blocks;
    for (std::size_t i = 1; i <= *n; ++i) {
      const auto s = static_cast<std::size_t>(sigma(static_cast<int>(i)));
      acted.push_back(m_.act(phi[s - 1], pi[s - 1]));
      blocks.push_back(pi[s - 1]);
    }
    E lhs = m_.gamma(m_.act(theta, sigma), acted);
    E rhs = m_.act(m_.gamma(theta, phi), block_compose(sigma, blocks));
    if (!(lhs == rhs)) return "total equivariance fails for " + m_.show(theta) + " with sigma " + sigma.str();

    // Partial form: (mu.s) o_i (nu.t) = (mu o_s(i) nu).(s o_i t).
    auto b = draw(1, m_.max_arity);
    if (!b || *n + *b > m_.budget + 1) return std::nullopt;
    E nu = m_.random(*b, rng_);
    const Permutation tau = random_permutation(*b, rng_);
    const std::size_t i = uniform(1, *n, rng_);
    E plhs = m_.circ(m_.act(theta, sigma), i, m_.act(nu, tau));
    E prhs = m_.act(m_.circ(theta, static_cast<std::size_t>(sigma(static_cast<int>(i))), nu),
                    partial_compose(sigma, i, tau));
    if (plhs == prhs) return std::nullopt;
    return "partial equivariance fails for " + m_.show(theta) + " o_" + std::to_string(i) + " " + m_.show(nu);
  }

  CaseResult partial_total() {
    auto l = draw(1, m_.max_arity);
    if (!l) return std::nullopt;
    std::vector<std::size_t> ms;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 50) return std::nullopt;
      ms = draws(*l, lo_, 2);
      if (ms.size() == *l && sum(ms) <= m_.budget) break;
    }
    E lambda = m_.random(*l, rng_);
    std::vector<E> mu = randoms(ms);
    E total = m_.gamma(lambda, mu);
    E from_right = lambda;
    for (std::size_t i = *l; i >= 1; --i) from_right = m_.circ(from_right, i, mu[i - 1]);
    E from_left = lambda;
    std::size_t at = 1;
    for (std::size_t i = 0; i < *l; ++i) {
      from_left = m_.circ(from_left, at, mu[i]);
      at += ms[i];
    }
    if (total == from_right && total == from_left) return std::nullopt;
    return "gamma and iterated partial compositions disagree for host " + m_.show(lambda);
  }

 private:
  static std::size_t sum(const std::vector<std::size_t>& v) { return std::accumulate(v.begin(), v.end(), std::size_t{0}); }

  std::optional<std::size_t> draw(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> options;
    for (std::size_t k = lo; k <= hi; ++k)
      if (m_.feasible(k)) options.push_back(k);
    if (options.empty()) return std::nullopt;
    return options[uniform(0, options.size() - 1, rng_)];
  }

  /// `count` draws; shorter on failure.
  std::vector<std::size_t> draws(std::size_t count, std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < count; ++i) {
      auto k = draw(lo, hi);
      if (!k) break;
      out.push_back(*k);
    }
    return out;
  }

  std::vector<E> randoms(const std::vector<std::size_t>& arities) {
    std::vector<E> out;
    out.reserve(arities.size());
    for (auto k : arities) out.push_back(m_.random(k, rng_));
    return out;
  }

  M& m_;
  Rng& rng_;
  std::size_t lo_;
};

template <class F>
CaseResult with_terms(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg, F f) {
  TermModel model(sig, ops, cfg.max_arity);
  Laws<TermModel> laws(model, rng, model.sampler.has_nullary() ? 0 : 1);
  return f(laws);
}

template <class F>
CaseResult with_maps(Rng& rng, EndoLawConfig cfg, F f) {
  EndoModel model{uniform(1, cfg.max_dim, rng), cfg.max_arity};
  Laws<EndoModel> laws(model, rng, 0);
  return f(laws);
}

}  // namespace

CaseResult term_associativity_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg) {
  return with_terms(sig, rng, ops, cfg, [](auto& l) { return l.associativity(); });
}
CaseResult term_partial_sequential_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg) {
  return with_terms(sig, rng, ops, cfg, [](auto& l) { return l.partial_sequential(); });
}
CaseResult term_partial_parallel_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg) {
  return with_terms(sig, rng, ops, cfg, [](auto& l) { return l.partial_parallel(); });
}
CaseResult term_unit_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg) {
  return with_terms(sig, rng, ops, cfg, [](auto& l) { return l.unit(); });
}
CaseResult term_equivariance_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg) {
  if (sig->mode() != Mode::symmetric) throw UnsupportedError("equivariance needs a symmetric signature");
  return with_terms(sig, rng, ops, cfg, [](auto& l) { return l.equivariance(); });
}
CaseResult term_partial_total_case(const SignaturePtr& sig, Rng& rng, const TermOps& ops, TermLawConfig cfg) {
  return with_terms(sig, rng, ops, cfg, [](auto& l) { return l.partial_total(); });
}

CaseResult endo_associativity_case(Rng& rng, EndoLawConfig cfg) {
  return with_maps(rng, cfg, [](auto& l) { return l.associativity(); });
}
CaseResult endo_partial_sequential_case(Rng& rng, EndoLawConfig cfg) {
  return with_maps(rng, cfg, [](auto& l) { return l.partial_sequential(); });
}
CaseResult endo_partial_parallel_case(Rng& rng, EndoLawConfig cfg) {
  return with_maps(rng, cfg, [](auto& l) { return l.partial_parallel(); });
}
CaseResult endo_unit_case(Rng& rng, EndoLawConfig cfg) {
  return with_maps(rng, cfg, [](auto& l) { return l.unit(); });
}
CaseResult endo_equivariance_case(Rng& rng, EndoLawConfig cfg) {
  return with_maps(rng, cfg, [](auto& l) { return l.equivariance(); });
}
CaseResult endo_partial_total_case(Rng& rng, EndoLawConfig cfg) {
  return with_maps(rng, cfg, [](auto& l) { return l.partial_total(); });
}

std::vector<LawReport> run_axiom_suite(const Presentation& p, const AxiomConfig& config, const TermOps& ops) {
  const SignaturePtr& sig = p.signature();
  const TermLawConfig cfg{config.max_arity};
  using Check = std::function<CaseResult(Rng&)>;
  struct Row {
    std::string law;
    bool applicable;
    std::vector<Check> checks;
  };
  const bool symmetric = sig->mode() == Mode::symmetric;
  std::vector<Row> rows{
      {"associativity",
       true,
       {[&](Rng& r) { return term_associativity_case(sig, r, ops, cfg); },
        [&](Rng& r) { return term_partial_sequential_case(sig, r, ops, cfg); },
        [&](Rng& r) { return term_partial_parallel_case(sig, r, ops, cfg); }}},
      {"unit", true, {[&](Rng& r) { return term_unit_case(sig, r, ops, cfg); }}},
      {"equivariance", symmetric, {[&](Rng& r) { return term_equivariance_case(sig, r, ops, cfg); }}},
      {"partial-total", true, {[&](Rng& r) { return term_partial_total_case(sig, r, ops, cfg); }}},
  };
  std::vector<LawReport> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    LawReport report{rows[k].law, rows[k].applicable, 0, 0, {}};
    if (report.applicable) {
      Rng rng(config.seed * 0x9E3779B97F4A7C15ULL + k);
      for (std::size_t c = 0; c < config.cases; ++c) {
        ++report.cases;
        for (const auto& check : rows[k].checks) {
          CaseResult r;
          try {
            r = check(rng);
          } catch (const Error& e) {
            r = std::string("error: ") + e.what();
          }
          if (r) {
            if (report.failures == 0) report.counterexample = *r;
            ++report.failures;
            break;
          }
        }
      }
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace operad
