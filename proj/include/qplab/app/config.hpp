#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace qplab::app {

struct Config {
  std::filesystem::path cache_dir = ".qplab-cache";
  int coset_limit = 200000;
  int jobs = 1;
};

// key = value lines, '#' comments; keys cache_dir, coset_limit, jobs.
// UsageError on unknown keys or malformed values.
Config parse_config(const std::string& text);
// The file at path (if given and present), then QPLAB_CACHE overrides cache_dir.
Config load_config(const std::optional<std::filesystem::path>& path);

}  // namespace qplab::app
