#include "config.hpp"

#include <fstream>

#include "outerstring/errors.hpp"

namespace outerstring::tools {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("config: " + key + " expects an integer, got \"" + value + "\"");
}

}  // namespace

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path + ":" + std::to_string(number) + ": expected key = value");
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    out[trim(line.substr(0, eq))] = value;
  }
  return out;
}

Settings load_settings(const std::string& path) {
  Settings s;
  const std::map<std::string, int*> fields = {
      {"threads", &s.threads},         {"treewidth_cap", &s.treewidth_cap},
      {"width_cap", &s.width_cap},     {"removal_cap", &s.removal_cap},
      {"epsilon_divisor", &s.epsilon_divisor}, {"biclique_budget_ms", &s.biclique_budget_ms},
  };
  for (const auto& [key, value] : read_key_values(path)) {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("config: unknown key " + key);
    *it->second = to_int(key, value);
  }
  return s;
}

}  // namespace outerstring::tools
