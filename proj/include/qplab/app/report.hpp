#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qplab::app {

inline constexpr const char* kVersion = "0.3.0";

using Json = nlohmann::json;

// Bad command-line parameters (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Markdown };
enum class Verdict { Pass, Fail, Info };

std::string to_string(Verdict v);

struct RunSpec {
  std::string command;
  std::optional<int> m, q, l;
  std::optional<std::string> kase;    // "1", "2a", "2b"
  std::optional<std::string> action;  // "i", "ii"
  Format format = Format::Json;
  bool use_cache = true;

  // The fields that determine the report; format and cache policy are excluded.
  Json to_json() const;
};

struct Check {
  std::string name;
  std::string paper_anchor;
  Verdict verdict = Verdict::Info;
  std::string witness;
};

struct Report {
  RunSpec spec;
  std::vector<Check> checks;
  Json details = Json::object();
  std::string markdown;  // command-specific body
  std::string version = kVersion;

  void add(std::string name, std::string anchor, bool pass, std::string witness = "");
  void info(std::string name, std::string anchor, std::string witness);
  // prefix every check name, used when sections are merged
  void merge(const Report& other, const std::string& section);
  bool passed() const;

  // {spec, checks, summary, version, details}; keys sorted, no timing
  Json body() const;
  std::string to_json() const;
  std::string to_markdown() const;
  static Report from_cache(const Json& body, const std::string& markdown, const RunSpec& spec);
};

}  // namespace qplab::app
