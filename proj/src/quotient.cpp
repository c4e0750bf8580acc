#include "operad/quotient.hpp"

#include <algorithm>

#include "operad/error.hpp"

namespace operad {

Presentation::Presentation(std::string name, SignaturePtr signature, std::vector<Relation> relations)
    : name_(std::move(name)), signature_(std::move(signature)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    if (r.element.is_zero()) throw ShapeError("relation '" + r.name + "' is zero");
    for (const auto& [t, c] : r.element.terms())
      if (!(t.signature() == *signature_))
        throw ShapeError("relation '" + r.name + "' uses a term over another signature");
  }
}

TermIndex::TermIndex(std::vector<Term> basis) : basis_(std::move(basis)) {
  index_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i].key(), i);
}

std::optional<std::size_t> TermIndex::find(const std::vector<int>& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector TermIndex::coordinates(const LinComb& v) const {
  SparseVector out;
  for (const auto& [t, c] : v.terms()) {
    auto idx = find(t.key());
    if (!idx) throw ShapeError("term of arity " + std::to_string(t.arity()) + " is not in this basis");
    out.push_back({*idx, c});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  return out;
}

void check_supported(const Presentation& p, std::size_t n, const QuotientOptions& options) {
  if (!p.signature()->finite_components())
    throw UnsupportedError("presentation '" + p.name() + "' has 0-ary or 1-ary generators; quotient components "
                           "are only computed for generator arities >= 2");
  if (n < 1) throw UnsupportedError("arity must be at least 1");
  if (n > options.max_arity)
    throw UnsupportedError("arity " + std::to_string(n) + " exceeds the cap " + std::to_string(options.max_arity));
  for (const auto& r : p.relations())
    if (r.element.arity().value_or(0) < 2)
      throw UnsupportedError("relation '" + r.name + "' has arity below 2");
}

namespace {

struct Filler {
  std::size_t arity;
  std::size_t index;
};

struct Job {
  std::size_t outer_arity;
  std::size_t outer;
  std::size_t slot;
  std::size_t relation;
  std::vector<Filler> fillers;
};

// Sums duplicate columns; drops zeros.
SparseVector normalize(std::vector<SparseEntry> parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  SparseVector out;
  for (auto& e : parts) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().value += e.value;
      if (out.back().value.is_zero()) out.pop_back();
    } else if (!e.value.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

void generate_ideal_rows(const Presentation& p, std::size_t n, const TermIndex& index,
                         const std::function<void(std::vector<SparseVector>&&)>& sink, QuotientOptions options) {
  check_supported(p, n, options);
  const auto& sig = p.signature();

  std::vector<std::vector<Term>> basis(n + 1);
  for (std::size_t m = 1; m <= n; ++m) basis[m] = m == n ? index.terms() : enumerate_basis(sig, m);

  std::vector<Job> jobs;
  for (std::size_t r = 0; r < p.relations().size(); ++r) {
    const std::size_t rel_arity = *p.relations()[r].element.arity();
    for (std::size_t a = 1; a <= n; ++a) {
      if (a - 1 + rel_arity > n) break;
      const std::size_t filler_total = n - a + 1;
      // Every tuple of filler arities summing to filler_total, then every basis choice.
      std::vector<Filler> current;
      std::function<void(std::size_t)> choose = [&](std::size_t left) {
        if (current.size() == rel_arity) {
          if (left != 0) return;
          for (std::size_t u = 0; u < basis[a].size(); ++u)
            for (std::size_t slot = 1; slot <= a; ++slot) jobs.push_back({a, u, slot, r, current});
          return;
        }
        const std::size_t still = rel_arity - current.size() - 1;
        for (std::size_t k = 1; k + still <= left; ++k)
          for (std::size_t s = 0; s < basis[k].size(); ++s) {
            current.push_back({k, s});
            choose(left - k);
            current.pop_back();
          }
      };
      choose(filler_total);
    }
  }

  const bool symmetric = sig->mode() == Mode::symmetric;
  std::vector<std::vector<int>> inverse_words;
  if (symmetric)
    for (const auto& s : all_permutations(n)) inverse_words.push_back(inverse(s).word());
  else
    inverse_words.push_back(Permutation::identity(n).word());

  constexpr std::size_t kChunk = 128;
  for (std::size_t start = 0; start < jobs.size(); start += kChunk) {
    const std::size_t len = std::min(kChunk, jobs.size() - start);
    std::vector<std::vector<SparseVector>> produced(len);
    bool escaped = false;
#pragma omp parallel for schedule(dynamic, 4)
    for (long j = 0; j < static_cast<long>(len); ++j) {
      const Job& job = jobs[start + static_cast<std::size_t>(j)];
      const Term& outer = basis[job.outer_arity][job.outer];
      std::vector<Term> fillers;
      for (const auto& f : job.fillers) fillers.push_back(basis[f.arity][f.index]);
      LinComb inner;
      for (const auto& [t, c] : p.relations()[job.relation].element.terms()) inner.add(gamma(t, fillers), c);
      std::vector<std::pair<std::vector<int>, Rational>> base;
      for (const auto& [t, c] : inner.terms()) base.emplace_back(circ(outer, job.slot, t).key(), c);

      for (const auto& inv : inverse_words) {
        std::vector<SparseEntry> parts;
        parts.reserve(base.size());
        for (const auto& [key, c] : base) {
          std::vector<int> relabelled = key;
          for (int& k : relabelled)
            if (k < 0) k = -inv[static_cast<std::size_t>(-k - 1)];
          auto idx = index.find(relabelled);
          if (!idx) {
#pragma omp atomic write
            escaped = true;
            continue;
          }
          parts.push_back({*idx, c});
        }
        auto row = normalize(std::move(parts));
        if (!row.empty()) produced[static_cast<std::size_t>(j)].push_back(std::move(row));
      }
    }
    if (escaped) throw ShapeError("ideal row left the free basis");
    std::vector<SparseVector> chunk;
    for (auto& rows : produced)
      for (auto& r : rows) chunk.push_back(std::move(r));
    sink(std::move(chunk));
  }
}

IdealBasis ideal_spanning_set(const Presentation& p, std::size_t n, QuotientOptions options) {
  check_supported(p, n, options);
  TermIndex index(enumerate_basis(p.signature(), n));
  IdealBasis out{n, index.terms(), RowMatrix(index.size())};
  generate_ideal_rows(
      p, n, index,
      [&](std::vector<SparseVector>&& rows) {
        for (auto& r : rows) out.spanning.add_sparse_row(std::move(r));
      },
      options);
  return out;
}

QuotientComponent::QuotientComponent(const Presentation& p, std::size_t n, QuotientOptions options)
    : arity_(n), index_((check_supported(p, n, options), enumerate_basis(p.signature(), n))), ideal_(index_.size()) {
  generate_ideal_rows(
      p, n, index_,
      [&](std::vector<SparseVector>&& rows) {
        if (ideal_.rank() < ideal_.ambient()) ideal_.insert_batch(rows);
      },
      options);
}

bool QuotientComponent::in_ideal(const LinComb& v) const {
  if (v.arity() && *v.arity() != arity_)
    throw ShapeError("element of arity " + std::to_string(*v.arity()) + " tested in arity " + std::to_string(arity_));
  return ideal_.contains(index_.coordinates(v));
}

bool QuotientComponent::equal(const LinComb& v, const LinComb& w) const { return in_ideal(v - w); }

std::size_t quotient_dim(const Presentation& p, std::size_t n, QuotientOptions options) {
  return QuotientComponent(p, n, options).quotient_dim();
}

bool equal_mod_ideal(const Presentation& p, const LinComb& v, const LinComb& w, QuotientOptions options) {
  if (v.arity() && w.arity() && *v.arity() != *w.arity())
    throw ShapeError("arity mismatch: cannot compare elements of arity " + std::to_string(*v.arity()) + " and " +
                     std::to_string(*w.arity()));
  auto n = v.arity() ? v.arity() : w.arity();
  if (!n) return true;  // both are the empty sum
  return QuotientComponent(p, *n, options).equal(v, w);
}

bool is_quadratic(const Presentation& p) {
  for (const auto& r : p.relations())
    for (const auto& [t, c] : r.element.terms())
      if (t.weight() != 2) return false;
  return true;
}

}  // namespace operad
