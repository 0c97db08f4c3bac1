#pragma once

#include <string>

#include "outerstring/io.hpp"

namespace outerstring::tools {

std::string sha256_hex(const std::string& data);

// SHA-256 of the compact dump of `report` with any "timings" member removed
// at every nesting level.
std::string report_digest(const Json& report);

}  // namespace outerstring::tools
