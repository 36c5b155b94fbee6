#include "qplab/app/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qplab/app/report.hpp"

namespace qplab::app {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int positive(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int n = std::stoi(v, &used);
    if (used == v.size() && n > 0) return n;
  } catch (const std::exception&) {
  }
  throw UsageError("config: " + key + " must be a positive integer, got '" + v + "'");
}

}  // namespace

Config parse_config(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key == "cache_dir") c.cache_dir = value;
    else if (key == "coset_limit") c.coset_limit = positive(key, value);
    else if (key == "jobs") c.jobs = positive(key, value);
    else throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return c;
}

Config load_config(const std::optional<std::filesystem::path>& path) {
  Config c;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw UsageError("cannot read config file " + path->string());
    std::ostringstream s;
    s << in.rdbuf();
    c = parse_config(s.str());
  }
  if (const char* env = std::getenv("QPLAB_CACHE"); env && *env) c.cache_dir = env;
  return c;
}

}  // namespace qplab::app
