#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "operad/axioms.hpp"
#include "operad/error.hpp"
#include "operad/permutation.hpp"
#include "oracles.hpp"

using namespace operad;
using testing_support::P;

TEST_CASE("permutation construction validates bijections") {
  CHECK_THROWS_AS(Permutation({}), ShapeError);
  CHECK_THROWS_AS(Permutation({1, 1}), ShapeError);
  CHECK_THROWS_AS(Permutation({0, 1}), ShapeError);
  CHECK_THROWS_AS(Permutation({1, 3}), ShapeError);
  CHECK(Permutation::identity(3) == P({1, 2, 3}));
  CHECK(P({2, 3, 1})(1) == 2);
  CHECK(P({2, 3, 1}).str() == "[2,3,1]");
}

TEST_CASE("compose and inverse") {
  CHECK(compose(Permutation::identity(2), P({2, 1})) == P({2, 1}));
  CHECK(compose(P({2, 1}), P({2, 1})) == P({1, 2}));
  CHECK(compose(P({2, 3, 1}), P({3, 1, 2})) == P({1, 2, 3}));
  CHECK_THROWS_AS(compose(P({1, 2}), P({1})), ShapeError);
  CHECK(inverse(P({1, 2, 3})) == P({1, 2, 3}));
  CHECK(inverse(P({2, 3, 1})) == P({3, 1, 2}));
  CHECK(inverse(P({2, 1})) == P({2, 1}));
}

TEST_CASE("block composition worked examples") {
  std::vector<Permutation> blocks{P({1, 2}), P({3, 1, 2}), P({2, 1})};
  CHECK(block_compose(P({2, 3, 1}), blocks) == P({3, 4, 7, 5, 6, 2, 1}));
  std::vector<Permutation> ids{Permutation::identity(2), Permutation::identity(3)};
  CHECK(block_compose(Permutation::identity(2), ids) == Permutation::identity(5));
  std::vector<Permutation> wrong{P({1})};
  CHECK_THROWS_AS(block_compose(P({2, 1}), wrong), ShapeError);
}

TEST_CASE("the second block example indexes its blocks by output position") {
  const Permutation sigma = P({2, 3, 1});
  std::vector<Permutation> pi{P({5, 1, 2, 3, 4}), P({2, 1}), P({1, 4, 2, 3})};
  const Permutation beta = P({7, 6, 8, 11, 9, 10, 5, 1, 2, 3, 4});
  std::vector<Permutation> by_output;
  for (int i = 1; i <= 3; ++i) by_output.push_back(pi[static_cast<std::size_t>(sigma(i) - 1)]);
  CHECK(block_compose(sigma, by_output) == beta);
  CHECK(block_compose(sigma, pi) == P({9, 5, 6, 7, 8, 11, 10, 1, 4, 2, 3}));
}

TEST_CASE("partial composition") {
  CHECK(partial_compose(P({3, 4, 2, 1}), 2, P({2, 3, 1})) == P({3, 5, 6, 4, 2, 1}));
  CHECK(partial_compose(P({3, 1, 2}), 2, Permutation::identity(1)) == P({3, 1, 2}));
  CHECK_THROWS_AS(partial_compose(P({2, 1}), 3, P({1})), ShapeError);
  CHECK_THROWS_AS(partial_compose(P({2, 1}), 0, P({1})), ShapeError);
}

TEST_CASE("block composition matches a picture-based oracle on random inputs") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Permutation s = random_permutation(n, rng);
    std::vector<Permutation> blocks;
    std::vector<std::vector<int>> raw;
    for (std::size_t i = 0; i < n; ++i) {
      blocks.push_back(random_permutation(1 + rng() % 4, rng));
      raw.push_back(blocks.back().word());
    }
    CHECK(block_compose(s, blocks).word() == oracle::naive_block_compose(s.word(), raw));
    const std::size_t i = 1 + rng() % n;
    const Permutation t = random_permutation(1 + rng() % 4, rng);
    std::vector<Permutation> with_ids;
    for (std::size_t k = 1; k <= n; ++k) with_ids.push_back(k == i ? t : Permutation::identity(1));
    CHECK(partial_compose(s, i, t) == block_compose(s, with_ids));
  }
}

TEST_CASE("S_n enumeration is complete and lexicographic") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto all = all_permutations(n);
    CHECK(all.size() == oracle::factorial(n));
    CHECK(std::is_sorted(all.begin(), all.end(), [](auto& a, auto& b) { return a.word() < b.word(); }));
  }
}

TEST_CASE("block composition is associative and unital in the symmetries operad") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const Permutation s = random_permutation(n, rng);
    std::vector<Permutation> mid;
    std::vector<std::vector<Permutation>> low;
    std::vector<Permutation> flat_low;
    for (std::size_t i = 0; i < n; ++i) {
      mid.push_back(random_permutation(1 + rng() % 3, rng));
      low.emplace_back();
      for (std::size_t j = 0; j < mid.back().degree(); ++j) {
        low.back().push_back(random_permutation(1 + rng() % 3, rng));
        flat_low.push_back(low.back().back());
      }
    }
    std::vector<Permutation> inner;
    for (std::size_t i = 0; i < n; ++i) inner.push_back(block_compose(mid[i], low[i]));
    CHECK(block_compose(block_compose(s, mid), flat_low) == block_compose(s, inner));
    std::vector<Permutation> ones(n, Permutation::identity(1));
    CHECK(block_compose(s, ones) == s);
    std::vector<Permutation> single{s};
    CHECK(block_compose(Permutation::identity(1), single) == s);
  }
}
