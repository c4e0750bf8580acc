#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "operad/error.hpp"
#include "operad/free_operad.hpp"
#include "operad/permutation.hpp"
#include "operad/quotient.hpp"
#include "operad/representation.hpp"
#include "operad/symmetrized.hpp"

namespace operad {

/// Structured-file violation; the message starts with the field path.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& message) : Error(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Nesting deeper than this is rejected rather than recursed into.
inline constexpr std::size_t kMaxParseDepth = 512;

/// One-line `[2,3,1]` or cycles `(1 2 3)(4 5)`. Cycle notation takes its degree
/// from `degree` or else from the largest point mentioned; `()` needs a degree.
Permutation parse_permutation(std::string_view src, std::optional<std::size_t> degree = std::nullopt);

/// term := INT | NAME "(" [term {"," term}] ")" | "id"
Term parse_term(std::string_view src, const SignaturePtr& signature);
std::string print_term(const Term& t);

/// lincomb := "0" | ["-"] sterm {("+"|"-") sterm};  sterm := [RATIONAL "*"] term
LinComb parse_lincomb(std::string_view src, const SignaturePtr& signature);
std::string print_lincomb(const LinComb& v);

/// Same grammar with permutations in place of terms: `3/2*[2,1] - [1,2]`.
/// `0` needs `degree`.
PermCombination parse_perm_combination(std::string_view src, std::optional<std::size_t> degree = std::nullopt);
std::string print_perm_combination(const PermCombination& x);

/// JSON: {name, mode, generators: [{name, arity}], relations: [expr | {name, expr}]}.
std::shared_ptr<const Presentation> load_presentation(std::string_view src);
std::string save_presentation(const Presentation& p);
std::shared_ptr<const Presentation> load_presentation_file(const std::string& path);

/// `dim N` followed by `g[i;j1,...,jn] = rational` lines; `#` starts a comment.
/// Entries not listed are zero.
Representation load_representation(std::string_view src, std::shared_ptr<const Presentation> p);
std::string save_representation(const Representation& r);

}  // namespace operad
