#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "operad/quotient.hpp"

namespace operad {

/// Built-in presentations: as, uas, com, ucom, ass, lie.
std::shared_ptr<const Presentation> preset(std::string_view name);
std::vector<std::string> preset_names();

/// Directory holding the shipped .opd copies of the presets.
std::string preset_directory();

}  // namespace operad
