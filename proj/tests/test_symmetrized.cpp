#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "operad/axioms.hpp"
#include "operad/error.hpp"
#include "operad/symmetrized.hpp"

using namespace operad;
using testing_support::P;

namespace {

PermCombination random_comb(std::size_t n, Rng& rng) {
  PermCombination x(n);
  const std::size_t k = 1 + rng() % 3;
  for (std::size_t i = 0; i < k; ++i) x.add(random_permutation(n, rng), Rational(static_cast<long>(rng() % 6) + 1, 2));
  return x;
}

}  // namespace

TEST_CASE("singletons compose by block composition") {
  PermCombination host(P({2, 3, 1}));
  std::vector<PermCombination> args{PermCombination(P({1, 2})), PermCombination(P({3, 1, 2})),
                                    PermCombination(P({2, 1}))};
  CHECK(ass_compose(host, args) == PermCombination(P({3, 4, 7, 5, 6, 2, 1})));
  std::vector<PermCombination> ids{PermCombination(Permutation::identity(2)), PermCombination(Permutation::identity(1))};
  CHECK(ass_compose(PermCombination(Permutation::identity(2)), ids) == PermCombination(Permutation::identity(3)));
  std::vector<PermCombination> short_args{PermCombination(P({1}))};
  CHECK_THROWS_AS(ass_compose(host, short_args), ShapeError);
}

TEST_CASE("composition is bilinear") {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const PermCombination h = random_comb(n, rng);
    std::vector<PermCombination> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(random_comb(1 + rng() % 3, rng));
    // Expand the host and every argument into singletons and sum.
    PermCombination expected(ass_compose(h, args).degree());
    for (const auto& [s, c] : h.terms()) {
      std::vector<std::vector<std::pair<Permutation, Rational>>> choices(n);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& kv : args[i].terms()) choices[i].push_back(kv);
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<Permutation> blocks;
        Rational coeff = c;
        for (std::size_t i = 0; i < n; ++i) {
          blocks.push_back(choices[i][idx[i]].first);
          coeff *= choices[i][idx[i]].second;
        }
        expected.add(block_compose(s, blocks), coeff);
        std::size_t k = 0;
        while (k < n && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == n) break;
      }
    }
    CHECK(ass_compose(h, args) == expected);
  }
}

TEST_CASE("right regular action") {
  Rng rng(7);
  const PermCombination x = random_comb(3, rng);
  CHECK(ass_act(x, Permutation::identity(3)) == x);
  CHECK(ass_act(PermCombination(P({2, 3, 1})), P({2, 1, 3})) == PermCombination(compose(P({2, 3, 1}), P({2, 1, 3}))));
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const PermCombination y = random_comb(n, rng);
    const Permutation s = random_permutation(n, rng), t = random_permutation(n, rng);
    CHECK(ass_act(ass_act(y, s), t) == ass_act(y, compose(s, t)));
  }
  CHECK_THROWS_AS(ass_act(x, P({1, 2})), ShapeError);
}

TEST_CASE("equivariance holds in Ass") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const PermCombination theta = random_comb(n, rng);
    std::vector<PermCombination> phi;
    std::vector<Permutation> pi;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = 1 + rng() % 2;
      phi.push_back(random_comb(k, rng));
      pi.push_back(random_permutation(k, rng));
    }
    const Permutation sigma = random_permutation(n, rng);
    std::vector<PermCombination> acted;
    std::vector<Permutation> blocks;
    for (std::size_t i = 1; i <= n; ++i) {
      const auto s = static_cast<std::size_t>(sigma(static_cast<int>(i)) - 1);
      acted.push_back(ass_act(phi[s], pi[s]));
      blocks.push_back(pi[s]);
    }
    CHECK(ass_compose(ass_act(theta, sigma), acted) == ass_act(ass_compose(theta, phi), block_compose(sigma, blocks)));
  }
}

TEST_CASE("term evaluation words compose like Ass") {
  // A basis term of the free symmetric operad on mu maps to the permutation
  // recording where each input sits; composition commutes with this map.
  auto ass = preset("ass");
  const auto& sig = ass->signature();
  Rng rng(19);
  auto image = [](const Term& t) { return PermCombination(Permutation(t.input_positions())); };
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const Term host = random_term(sig, n, rng);
    std::vector<Term> args;
    std::vector<PermCombination> images;
    for (std::size_t i = 0; i < n; ++i) {
      args.push_back(random_term(sig, 1 + rng() % 3, rng));
      images.push_back(image(args.back()));
    }
    CHECK(image(gamma(host, args)) == ass_compose(image(host), images));
    const Permutation s = random_permutation(n, rng);
    CHECK(image(act(host, s)) == ass_act(image(host), s));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    std::set<Permutation> seen;
    for (const auto& t : enumerate_basis(sig, n)) seen.insert(Permutation(t.input_positions()));
    CHECK(seen.size() == quotient_dim(*ass, n));
  }
}
