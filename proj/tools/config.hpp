#pragma once

#include <map>
#include <string>

namespace outerstring::tools {

// Settings that may come from a key=value config file. Command-line flags
// override them.
struct Settings {
  int threads = 0;  // 0: OUTERSTRING_THREADS or hardware concurrency
  int treewidth_cap = 25;
  int width_cap = 12;
  int removal_cap = 20;
  int epsilon_divisor = 8;
  int biclique_budget_ms = 2000;
};

// Lines are `key = value`; `#` starts a comment; blank lines are ignored.
// Throws ParseError on unknown keys or malformed lines.
std::map<std::string, std::string> read_key_values(const std::string& path);

Settings load_settings(const std::string& path);

}  // namespace outerstring::tools
