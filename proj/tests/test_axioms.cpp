#include <doctest.h>

#include "helpers.hpp"
#include "operad/axioms.hpp"
#include "operad/error.hpp"

using namespace operad;

TEST_CASE("random terms have the requested arity") {
  Rng rng(1);
  for (const auto& name : preset_names()) {
    auto sig = preset(name)->signature();
    for (std::size_t n = 0; n <= 5; ++n) {
      bool nullary = false;
      for (const auto& g : sig->generators()) nullary = nullary || g.arity == 0;
      if (n == 0 && !nullary) {
        CHECK_THROWS_AS(random_term(sig, 0, rng), UnsupportedError);
        continue;
      }
      for (int k = 0; k < 20; ++k) CHECK(random_term(sig, n, rng).arity() == n);
    }
  }
  auto ternary = make_signature({{"t", 3}}, Mode::planar);
  CHECK_THROWS_AS(random_term(ternary, 2, rng), UnsupportedError);
  CHECK(random_term(ternary, 5, rng).arity() == 5);
}

TEST_CASE("the suite passes on every preset") {
  for (const auto& name : preset_names()) {
    auto rows = run_axiom_suite(*preset(name), AxiomConfig{60, 3, 5});
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
      INFO(name << " " << r.law << ": " << r.counterexample);
      CHECK(r.pass());
    }
    CHECK(rows[2].applicable == (preset(name)->signature()->mode() == Mode::symmetric));
  }
}

TEST_CASE("a composition that ignores labels breaks equivariance") {
  auto lie = preset("lie");
  TermOps broken = TermOps::standard();
  // Plug args[p] at planar position p instead of at the leaf labelled p+1.
  broken.gamma = [](const Term& host, std::span<const Term> args) {
    std::vector<Term> reordered(args.begin(), args.end());
    for (std::size_t p = 0; p < host.labels().size(); ++p)
      reordered[static_cast<std::size_t>(host.labels()[p] - 1)] = args[p];
    return gamma(host, reordered);
  };
  broken.circ = [broken](const Term& host, std::size_t i, const Term& arg) {
    std::vector<Term> args(host.arity(), Term::unit(host.signature_ptr()));
    args.at(i - 1) = arg;
    return broken.gamma(host, args);
  };
  auto rows = run_axiom_suite(*lie, AxiomConfig{200, 5, 5}, broken);
  CHECK_FALSE(rows[2].pass());
  CHECK(rows[1].pass());
}

TEST_CASE("End_V laws") {
  Rng rng(77);
  for (int k = 0; k < 100; ++k) {
    CHECK_FALSE(endo_associativity_case(rng));
    CHECK_FALSE(endo_partial_sequential_case(rng));
    CHECK_FALSE(endo_partial_parallel_case(rng));
    CHECK_FALSE(endo_unit_case(rng));
    CHECK_FALSE(endo_equivariance_case(rng));
    CHECK_FALSE(endo_partial_total_case(rng));
  }
}
