// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "operad/axioms.hpp"
#include "operad/error.hpp"
#include "operad/presets.hpp"
#include "operad/representation.hpp"
#include "operad/termio.hpp"
#include "oracles.hpp"

using namespace operad;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(const std::string& id, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << id << "  " << detail << std::endl;
  if (!ok) ++failures;
}

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

void criterion1() {
  std::vector<Permutation> blocks{P({1, 2}), P({3, 1, 2}), P({2, 1})};
  const auto t0 = Clock::now();
  const Permutation r = block_compose(P({2, 3, 1}), blocks);
  const double dt = seconds_since(t0);
  report("1 block composition", r == P({3, 4, 7, 5, 6, 2, 1}) && dt < 1e-3,
         "got " + r.str() + " in " + std::to_string(dt * 1e6) + " us");
}

void criterion2() {
  auto sig = make_signature({{"theta", 3}, {"phi1", 5}, {"phi2", 2}, {"phi3", 4}}, Mode::symmetric);
  const Permutation sigma = P({2, 3, 1});
  const Permutation beta = P({7, 6, 8, 11, 9, 10, 5, 1, 2, 3, 4});
  std::vector<Term> phi{gen_corolla(sig, "phi1"), gen_corolla(sig, "phi2"), gen_corolla(sig, "phi3")};
  std::vector<Permutation> pi{P({5, 1, 2, 3, 4}), P({2, 1}), P({1, 4, 2, 3})};
  const Term theta = gen_corolla(sig, "theta");
  std::vector<Term> acted;
  std::vector<Permutation> by_output;
  for (int i = 1; i <= 3; ++i) {
    const auto s = static_cast<std::size_t>(sigma(i) - 1);
    acted.push_back(act(phi[s], pi[s]));
    by_output.push_back(pi[s]);
  }
  const Term lhs = gamma(act(theta, sigma), acted);
  const Term rhs = act(gamma(theta, phi), block_compose(sigma, by_output));
  const Permutation read(lhs.input_positions());
  report("2a equivariance, 11-leaf terms", lhs == rhs && read == beta,
         "LHS " + print_term(lhs) + (lhs == rhs ? " == " : " != ") + "RHS, input positions " + read.str());

  const Permutation literal = block_compose(sigma, pi);
  const Permutation reindexed = block_compose(sigma, by_output);
  report("2b block_compose(sigma,(pi1,pi2,pi3)) literal", literal == beta,
         "got " + literal.str() + "; the stated value " + beta.str() +
             " is block_compose(sigma,(pi_sigma(1),pi_sigma(2),pi_sigma(3))) = " + reindexed.str() +
             ". The convention that reproduces criteria 1 and 3 indexes blocks by input position, so this "
             "literal form cannot hold alongside them");
}

void criterion3() {
  const Permutation r = partial_compose(P({3, 4, 2, 1}), 2, P({2, 3, 1}));
  report("3 partial composition", r == P({3, 5, 6, 4, 2, 1}), "got " + r.str());
}

void criterion4() {
  const auto t0 = Clock::now();
  auto sig = make_signature({{"mu", 2}, {"t", 3}}, Mode::symmetric);
  const TermOps ops = TermOps::standard();
  const TermLawConfig tc{5};
  const EndoLawConfig ec{3, 3};
  using TermCase = CaseResult (*)(const SignaturePtr&, Rng&, const TermOps&, TermLawConfig);
  using EndoCase = CaseResult (*)(Rng&, EndoLawConfig);
  const std::vector<std::tuple<std::string, TermCase, EndoCase>> laws{
      {"associativity", term_associativity_case, endo_associativity_case},
      {"unit", term_unit_case, endo_unit_case},
      {"equivariance", term_equivariance_case, endo_equivariance_case},
      {"partial-sequential", term_partial_sequential_case, endo_partial_sequential_case},
      {"partial-parallel", term_partial_parallel_case, endo_partial_parallel_case},
  };
  std::size_t bad = 0;
  std::string first;
  Rng rng(4);
  for (const auto& [name, tcase, ecase] : laws)
    for (int k = 0; k < 500; ++k) {
      if (auto r = tcase(sig, rng, ops, tc); r) {
        ++bad;
        if (first.empty()) first = name + ": " + *r;
      }
      if (auto r = ecase(rng, ec); r) {
        ++bad;
        if (first.empty()) first = name + ": " + *r;
      }
    }
  const double dt = seconds_since(t0);
  report("4 axiom property suite", bad == 0 && dt < 60,
         "5 laws x 500 cases on terms and End_V, " + std::to_string(bad) + " failures, " + std::to_string(dt) + " s" +
             (first.empty() ? "" : "; " + first));
}

void criterion5() {
  auto sig = make_signature({{"mu", 2}, {"t", 3}}, Mode::symmetric);
  Rng rng(5);
  std::size_t bad = 0;
  for (int k = 0; k < 300; ++k) {
    if (term_partial_total_case(sig, rng, TermOps::standard(), {5})) ++bad;
    if (endo_partial_total_case(rng)) ++bad;
  }
  report("5 partial/total equivalence", bad == 0, "300 term + 300 End_V instances, " + std::to_string(bad) + " failures");
}

using Eval = oracle::Poly (*)(const Term&);

bool dim_row(const std::string& preset_name, std::size_t n, std::size_t expected, Eval eval, double limit,
             std::string& log) {
  auto p = preset(preset_name);
  std::vector<oracle::Poly> images;
  for (const auto& t : enumerate_basis(p->signature(), n)) images.push_back(eval(t));
  const std::size_t from_oracle = oracle::poly_rank(images);
  const auto t0 = Clock::now();
  const std::size_t got = quotient_dim(*p, n);
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << " " << preset_name << "(" << n << ")=" << got;
  log += os.str();
  const bool ok = got == expected && from_oracle == expected && dt < limit;
  if (!ok) log += "[oracle " + std::to_string(from_oracle) + ", " + std::to_string(dt) + " s]";
  return ok;
}

void criterion6() {
  bool ok = true;
  std::string log;
  for (std::size_t n = 2; n <= 6; ++n) ok &= dim_row("as", n, 1, oracle::monoid_word, n <= 4 ? 10 : 300, log);
  for (std::size_t n = 2; n <= 4; ++n) ok &= dim_row("ass", n, oracle::factorial(n), oracle::associative_word, 10, log);
  for (std::size_t n = 2; n <= 5; ++n) ok &= dim_row("com", n, 1, oracle::commutative_monomial, n <= 4 ? 10 : 300, log);
  const auto t0 = Clock::now();
  for (std::size_t n = 2; n <= 5; ++n)
    ok &= dim_row("lie", n, oracle::factorial(n - 1), oracle::bracket_expansion, n <= 4 ? 10 : 300, log);
  report("6 quotient dimensions", ok, log.substr(1) + "; lie total " + std::to_string(seconds_since(t0)) + " s");
}

void criterion7() {
  bool ok = true;
  for (Mode mode : {Mode::symmetric, Mode::planar}) {
    auto sig = make_signature({{"mu", 2}}, mode);
    for (std::size_t n = 1; n <= 6; ++n) {
      const std::size_t closed = oracle::catalan(n - 1) * (mode == Mode::symmetric ? oracle::factorial(n) : 1);
      const std::size_t exhaustive =
          oracle::bracketings(n).size() * (mode == Mode::symmetric ? oracle::factorial(n) : 1);
      const std::size_t got = enumerate_basis(sig, n).size();
      ok &= got == closed && closed == exhaustive && basis_size(*sig, n) == got;
    }
  }
  report("7 free basis counts", ok, "n!*Catalan(n-1) symmetric, Catalan(n-1) planar, n = 1..6");
}

void criterion8() {
  struct Row {
    const char* preset;
    const char* algebra;
    bool pass;
  };
  const Row rows[] = {{"lie", "cross3", true}, {"as", "mat2", true}, {"com", "zero", true},
                      {"as", "zero", true},    {"as", "sub", false}};
  bool ok = true;
  std::string log;
  for (const auto& r : rows) {
    const auto t0 = Clock::now();
    const Verdict v = check_relations(rep_from_algebra(preset(r.preset), builtin_algebra(r.algebra)));
    const double dt = seconds_since(t0);
    bool good = v.pass == r.pass && dt < 1;
    if (!r.pass) good = good && v.subject == "assoc";
    ok &= good;
    log += std::string(" ") + r.algebra + "/" + r.preset + ":" + (v.pass ? "PASS" : "FAIL " + v.subject + " at " + v.witness);
  }
  report("8 representation verdicts", ok, log.substr(1));
}

void criterion9() {
  auto as = preset("as");
  bool ok = true;
  for (const char* name : {"mat2", "cross3"}) {
    const MultilinearMap m = builtin_algebra(name).structure.at("product");
    const Representation r = rep_from_binary(as, m);
    ok &= binary_from_rep(r).coeffs() == m.coeffs();
    MultilinearMap psi = MultilinearMap::identity(m.dim());
    std::string comb = "1";
    for (std::size_t n = 2; n <= 5; ++n) {
      std::vector<MultilinearMap> args{psi, MultilinearMap::identity(m.dim())};
      psi = compose_endo(m, args);
      comb = "mu(" + comb + "," + std::to_string(n) + ")";
      ok &= derived_map(r, parse_term(comb, as->signature())) == psi;
    }
  }
  report("9 As round trip and left-comb recursion", ok, "mat2, cross3; n = 2..5");
}

void criterion10() {
  auto lie = preset("lie");
  const auto& sig = lie->signature();
  const Representation r = rep_from_algebra(lie, builtin_algebra("cross3"));
  Rng rng(10);
  std::size_t agree = 0;
  std::vector<IdealBasis> ideals;
  for (std::size_t n = 2; n <= 4; ++n) ideals.push_back(ideal_spanning_set(*lie, n));
  for (int k = 0; k < 100; ++k) {
    const IdealBasis& ideal = ideals[rng() % ideals.size()];
    LinComb v;
    for (int j = 0; j < 3; ++j)
      v.add(random_term(sig, ideal.arity, rng), Rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3));
    LinComb w = v;
    for (int j = 0; j < 4; ++j) {
      const auto& row = ideal.spanning.sparse_rows()[rng() % ideal.spanning.rows()];
      const Rational c(static_cast<long>(rng() % 9) - 4);
      for (const auto& e : row) w.add(ideal.basis[e.col], c * e.value);
    }
    if (!v.arity()) v.add(random_term(sig, ideal.arity, rng), Rational(0));
    if (!w.arity()) w.add(random_term(sig, ideal.arity, rng), Rational(0));
    if (derived_map(r, v) == derived_map(r, w) && equal_mod_ideal(*lie, v, w)) ++agree;
  }
  report("10 representations factor through the quotient", agree == 100,
         std::to_string(agree) + "/100 pairs agree (Lie, cross3)");
}

std::string mutate(std::string s, Rng& rng) {
  static const std::string alphabet = "mul()0123456789,+-*/[] id e_x\t{}\":";
  const int edits = 1 + static_cast<int>(rng() % 6);
  for (int k = 0; k < edits; ++k) {
    const std::size_t at = s.empty() ? 0 : rng() % (s.size() + 1);
    const char c = rng() % 8 == 0 ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    const auto op = rng() % 3;
    if (op == 0)
      s.insert(s.begin() + static_cast<long>(at), c);
    else if (at < s.size())
      op == 1 ? (void)s.erase(at, 1) : (void)(s[at] = c);
  }
  return s;
}

void criterion11() {
  auto sig = make_signature({{"mu", 2}, {"l", 2}, {"e", 0}}, Mode::symmetric);
  const std::string opd = save_presentation(*preset("lie"));
  const std::vector<std::string> seeds{"mu(mu(1,2),3)", "l(1,2) + l(2,1)", "3/2*mu(2,1) - mu(1,2)", "[2,3,1]",
                                       "(1 2)(3 4)", "mu(e(),1) - id", opd};
  Rng rng(11);
  std::size_t crashes = 0, parsed = 0;
  for (int k = 0; k < 10000; ++k) {
    const std::string input = mutate(seeds[rng() % seeds.size()], rng);
    for (int which = 0; which < 4; ++which) {
      try {
        switch (which) {
          case 0: (void)parse_term(input, sig); break;
          case 1: (void)parse_lincomb(input, sig); break;
          case 2: (void)parse_permutation(input); break;
          default: (void)load_presentation(input);
        }
        ++parsed;
      } catch (const Error&) {
      } catch (const std::exception&) {
        ++crashes;  // anything outside the library's error hierarchy counts as a crash
      }
    }
  }
  auto rsig = make_signature({{"mu", 2}, {"t", 3}, {"l", 2}}, Mode::symmetric);
  std::size_t trips = 0;
  for (int k = 0; k < 500; ++k) {
    const Term t = random_term(rsig, 1 + rng() % 6, rng);
    LinComb v;
    const std::size_t n = 1 + rng() % 4;
    for (int j = 0; j < 3; ++j) v.add(random_term(rsig, n, rng), Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3));
    const Permutation s = random_permutation(1 + rng() % 8, rng);
    const std::string name = preset_names()[rng() % preset_names().size()];
    const std::string text = save_presentation(*preset(name));
    if (parse_term(print_term(t), rsig) == t && parse_lincomb(print_lincomb(v), rsig) == v &&
        parse_permutation(s.str()) == s && save_presentation(*load_presentation(text)) == text)
      ++trips;
  }
  report("11 parser robustness", crashes == 0 && trips == 500,
         "10000 fuzzed inputs x 4 parsers, " + std::to_string(crashes) + " crashes, " + std::to_string(parsed) +
             " accepted; " + std::to_string(trips) + "/500 round trips");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8,
                                                    criterion9, criterion10, criterion11};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      report("?", false, std::string("unexpected exception: ") + e.what());
    }
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion line(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
