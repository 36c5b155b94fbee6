#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qplab/app/report.hpp"

namespace qplab::app {

// 64-bit FNV-1a, hex
std::string content_hash(const std::string& text);

// One file per report, named by the hash of the spec and the toolkit version.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, std::string version = kVersion);

  std::string key(const RunSpec& spec) const;
  std::filesystem::path entry_path(const RunSpec& spec) const;

  // nullopt on a miss. A damaged entry is also a miss; warning then says why
  // (CacheCorrupt) and the next store overwrites it.
  std::optional<Report> lookup(const RunSpec& spec, std::string* warning = nullptr) const;
  void store(const Report& report) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
};

}  // namespace qplab::app
