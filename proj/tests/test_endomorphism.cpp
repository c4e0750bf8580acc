#include <doctest.h>

#include "helpers.hpp"
#include "operad/axioms.hpp"
#include "operad/endomorphism.hpp"
#include "operad/error.hpp"

using namespace operad;
using testing_support::P;

namespace {

DenseVector e(std::size_t dim, std::size_t i) {
  DenseVector v(dim);
  v[i] = Rational(1);
  return v;
}

MultilinearMap linear(std::size_t dim, const std::vector<long>& rowmajor) {
  MultilinearMap m(dim, 1);
  for (std::size_t o = 0; o < dim; ++o)
    for (std::size_t j = 0; j < dim; ++j) m.at_flat(o, j) = Rational(rowmajor[o * dim + j]);
  return m;
}

}  // namespace

TEST_CASE("composition with units") {
  Rng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = 1 + rng() % 3, arity = rng() % 4;
    const MultilinearMap f = random_map(dim, arity, rng);
    std::vector<MultilinearMap> ids(arity, MultilinearMap::identity(dim));
    CHECK(compose_endo(f, ids) == f);
    std::vector<MultilinearMap> single{f};
    CHECK(compose_endo(MultilinearMap::identity(dim), single) == f);
  }
}

TEST_CASE("coordinatewise product after linear maps, against direct evaluation") {
  MultilinearMap prod(2, 2);
  const std::size_t both[2][2] = {{0, 0}, {1, 1}};
  for (auto& idx : both) prod.at(idx[0], std::vector<std::size_t>{idx[0], idx[1]}) = Rational(1);
  const MultilinearMap a = linear(2, {1, 2, 3, 4});
  const MultilinearMap b = linear(2, {0, -1, 5, 1});
  std::vector<MultilinearMap> args{a, b};
  const MultilinearMap c = compose_endo(prod, args);
  // c(e_i, e_j)_k = A[k][i] * B[k][j]
  const long A[2][2] = {{1, 2}, {3, 4}}, B[2][2] = {{0, -1}, {5, 1}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        CHECK(c.at(k, std::vector<std::size_t>{i, j}) == Rational(A[k][i] * B[k][j]));
}

TEST_CASE("parallel composition equals the serial reference") {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 1 + rng() % 3, arity = rng() % 3 + 1;
    const MultilinearMap f = random_map(dim, arity, rng);
    std::vector<MultilinearMap> args;
    for (std::size_t i = 0; i < arity; ++i) args.push_back(random_map(dim, rng() % 3, rng));
    CHECK(compose_endo(f, args) == compose_endo_reference(f, args));
  }
}

TEST_CASE("composition shape errors") {
  const MultilinearMap f(2, 2);
  std::vector<MultilinearMap> one{MultilinearMap::identity(2)};
  CHECK_THROWS_AS(compose_endo(f, one), ShapeError);
  std::vector<MultilinearMap> wrong_dim{MultilinearMap::identity(3), MultilinearMap::identity(2)};
  CHECK_THROWS_AS(compose_endo(f, wrong_dim), ShapeError);
  CHECK_THROWS_AS(act_endo(f, P({1})), ShapeError);
  std::vector<DenseVector> short_input{e(2, 0)};
  CHECK_THROWS_AS(evaluate(f, short_input), ShapeError);
}

TEST_CASE("action permutes inputs") {
  Rng rng(12);
  const MultilinearMap f = random_map(2, 3, rng);
  const MultilinearMap g = act_endo(f, P({2, 3, 1}));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        std::vector<DenseVector> in{e(2, a), e(2, b), e(2, c)}, swapped{e(2, c), e(2, a), e(2, b)};
        CHECK(evaluate(g, in) == evaluate(f, swapped));
      }
  CHECK(act_endo(f, Permutation::identity(3)) == f);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const MultilinearMap h = random_map(1 + rng() % 3, n, rng);
    const Permutation s = random_permutation(n, rng), t = random_permutation(n, rng);
    CHECK(act_endo(act_endo(h, s), t) == act_endo(h, compose(s, t)));
  }
}

TEST_CASE("evaluation") {
  std::vector<DenseVector> in{e(3, 0)};
  CHECK(evaluate(MultilinearMap::identity(3), in) == e(3, 0));
  MultilinearMap cross(3, 2);
  const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                            {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                            {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        cross.at(c, std::vector<std::size_t>{a, b}) = Rational(eps[a][b][c]);
  std::vector<DenseVector> pair{e(3, 0), e(3, 1)};
  CHECK(evaluate(cross, pair) == e(3, 2));
  const MultilinearMap k = MultilinearMap::constant({Rational(4), Rational(-1)});
  CHECK(evaluate(k, std::vector<DenseVector>{}) == DenseVector{Rational(4), Rational(-1)});
}
