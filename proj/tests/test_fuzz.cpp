#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "operad/axioms.hpp"
#include "operad/error.hpp"

using namespace operad;

namespace {

/// Mutates a seed string: random insertions, deletions and byte flips drawn
/// from the grammar's alphabet plus arbitrary bytes.
std::string mutate(std::string s, std::mt19937_64& rng) {
  static const std::string alphabet = "mul()0123456789,+-*/[] id e_x\t";
  const int edits = 1 + static_cast<int>(rng() % 6);
  for (int k = 0; k < edits; ++k) {
    const std::size_t at = s.empty() ? 0 : rng() % (s.size() + 1);
    const char c = rng() % 8 == 0 ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    switch (rng() % 3) {
      case 0:
        s.insert(s.begin() + static_cast<long>(at), c);
        break;
      case 1:
        if (at < s.size()) s.erase(at, 1);
        break;
      default:
        if (at < s.size()) s[at] = c;
    }
  }
  return s;
}

}  // namespace

TEST_CASE("parsers never crash on mutated input") {
  auto sig = make_signature({{"mu", 2}, {"l", 2}, {"e", 0}}, Mode::symmetric);
  const std::vector<std::string> seeds{"mu(mu(1,2),3)", "l(1,2) + l(2,1)", "3/2*mu(2,1) - mu(1,2)", "[2,3,1]",
                                       "(1 2)(3 4)", "mu(e(),1) - id", "3/2*[2,1] - [1,2]"};
  std::mt19937_64 rng(2024);
  std::size_t accepted = 0;
  for (int k = 0; k < 2000; ++k) {
    const std::string input = mutate(seeds[rng() % seeds.size()], rng);
    auto attempt = [&](auto&& f) {
      try {
        f();
        ++accepted;
      } catch (const ParseError& e) {
        CHECK(e.span().start <= e.span().end);
        CHECK(e.span().end <= input.size() + 1);
      } catch (const Error&) {
      }
    };
    attempt([&] { (void)parse_term(input, sig); });
    attempt([&] { (void)parse_lincomb(input, sig); });
    attempt([&] { (void)parse_permutation(input); });
    attempt([&] { (void)parse_perm_combination(input); });
    attempt([&] { (void)load_presentation(input); });
  }
  CHECK(accepted > 0);
}
