#include "operad/symmetrized.hpp"

#include <vector>

#include "operad/error.hpp"

namespace operad {

PermCombination::PermCombination(std::size_t degree) : degree_(degree) {
  if (degree == 0) throw ShapeError("permutation combinations need degree >= 1");
}

PermCombination::PermCombination(const Permutation& s, const Rational& c) : degree_(s.degree()) { add(s, c); }

Rational PermCombination::coefficient(const Permutation& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PermCombination::add(const Permutation& s, const Rational& c) {
  if (s.degree() != degree_)
    throw ShapeError("degree mismatch: " + std::to_string(s.degree()) + " vs " + std::to_string(degree_));
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PermCombination& PermCombination::operator+=(const PermCombination& other) {
  if (other.degree_ != degree_)
    throw ShapeError("degree mismatch: " + std::to_string(other.degree_) + " vs " + std::to_string(degree_));
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

PermCombination PermCombination::scaled(const Rational& c) const {
  PermCombination out(degree_);
  if (c.is_zero()) return out;
  for (const auto& [s, k] : terms_) out.terms_.emplace(s, k * c);
  return out;
}

PermCombination ass_compose(const PermCombination& host, std::span<const PermCombination> args) {
  if (args.size() != host.degree())
    throw ShapeError("host of degree " + std::to_string(host.degree()) + " given " + std::to_string(args.size()) +
                     " arguments");
  std::size_t total = 0;
  for (const auto& a : args) total += a.degree();
  PermCombination out(total);
  if (host.is_zero()) return out;
  for (const auto& a : args)
    if (a.is_zero()) return out;

  // Odometer over one term per argument.
  using Iter = std::map<Permutation, Rational>::const_iterator;
  std::vector<Iter> pick;
  for (const auto& a : args) pick.push_back(a.terms().begin());
  std::vector<Permutation> blocks;
  blocks.reserve(args.size());
  while (true) {
    blocks.clear();
    Rational coeff(1);
    for (const auto& it : pick) {
      blocks.push_back(it->first);
      coeff *= it->second;
    }
    for (const auto& [s, c] : host.terms()) out.add(block_compose(s, blocks), c * coeff);
    std::size_t k = args.size();
    while (k > 0) {
      --k;
      if (++pick[k] != args[k].terms().end()) break;
      pick[k] = args[k].terms().begin();
      if (k == 0) return out;
    }
    if (args.empty()) return out;
  }
}

PermCombination ass_act(const PermCombination& x, const Permutation& s) {
  if (s.degree() != x.degree())
    throw ShapeError("degree mismatch: " + std::to_string(s.degree()) + " vs " + std::to_string(x.degree()));
  PermCombination out(x.degree());
  for (const auto& [p, c] : x.terms()) out.add(compose(p, s), c);
  return out;
}

}  // namespace operad
