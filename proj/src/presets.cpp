#include "operad/presets.hpp"

#include <map>

#include "operad/error.hpp"
#include "operad/termio.hpp"

#ifndef OPERAD_PRESET_DIR
#define OPERAD_PRESET_DIR "presets"
#endif

namespace operad {

namespace {

struct PresetSpec {
  Mode mode;
  std::vector<Generator> generators;
  std::vector<std::pair<std::string, std::string>> relations;
};

const std::string kAssoc = "mu(mu(1,2),3) - mu(1,mu(2,3))";

const std::map<std::string, PresetSpec>& specs() {
  static const std::map<std::string, PresetSpec> table{
      {"as", {Mode::planar, {{"mu", 2}}, {{"assoc", kAssoc}}}},
      {"uas",
       {Mode::planar,
        {{"mu", 2}, {"e", 0}},
        {{"assoc", kAssoc}, {"unit_left", "mu(e(),1) - id"}, {"unit_right", "mu(1,e()) - id"}}}},
      {"com", {Mode::symmetric, {{"mu", 2}}, {{"comm", "mu(1,2) - mu(2,1)"}, {"assoc", kAssoc}}}},
      {"ucom",
       {Mode::symmetric,
        {{"mu", 2}, {"e", 0}},
        {{"comm", "mu(1,2) - mu(2,1)"},
         {"assoc", kAssoc},
         {"unit_left", "mu(e(),1) - id"},
         {"unit_right", "mu(1,e()) - id"}}}},
      {"ass", {Mode::symmetric, {{"mu", 2}}, {{"assoc", kAssoc}}}},
      {"lie",
       {Mode::symmetric,
        {{"l", 2}},
        {{"anticomm", "l(1,2) + l(2,1)"}, {"jacobi", "l(l(1,2),3) + l(l(3,1),2) + l(l(2,3),1)"}}}},
  };
  return table;
}

}  // namespace

std::shared_ptr<const Presentation> preset(std::string_view name) {
  auto it = specs().find(std::string(name));
  if (it == specs().end()) throw Error("unknown preset '" + std::string(name) + "'");
  const PresetSpec& spec = it->second;
  auto sig = make_signature(spec.generators, spec.mode);
  std::vector<Relation> relations;
  for (const auto& [rname, expr] : spec.relations) relations.push_back({rname, parse_lincomb(expr, sig)});
  return std::make_shared<const Presentation>(std::string(name), sig, std::move(relations));
}

std::vector<std::string> preset_names() { return {"as", "uas", "com", "ucom", "ass", "lie"}; }

std::string preset_directory() { return OPERAD_PRESET_DIR; }

}  // namespace operad
