#pragma once

#include <string>
#include <vector>

#include "operad/free_operad.hpp"
#include "operad/presets.hpp"
#include "operad/termio.hpp"

namespace testing_support {

inline operad::SignaturePtr binary_sig(operad::Mode mode, const std::string& name = "mu") {
  return operad::make_signature({{name, 2}}, mode);
}

inline operad::Term T(const operad::SignaturePtr& sig, const std::string& text) {
  return operad::parse_term(text, sig);
}

inline operad::LinComb L(const operad::SignaturePtr& sig, const std::string& text) {
  return operad::parse_lincomb(text, sig);
}

inline operad::Permutation P(std::vector<int> w) { return operad::Permutation(std::move(w)); }

}  // namespace testing_support
