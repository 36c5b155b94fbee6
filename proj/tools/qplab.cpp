#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "qplab/app/cache.hpp"
#include "qplab/app/commands.hpp"
#include "qplab/app/config.hpp"
#include "qplab/errors.hpp"

using namespace qplab;
using namespace qplab::app;

namespace {

bool is_usage(ErrorCode c) {
  return c == ErrorCode::OutOfRange || c == ErrorCode::MTooLarge || c == ErrorCode::InvalidArgument ||
         c == ErrorCode::IncompatibleAction || c == ErrorCode::ParseError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Verification toolkit for quasiplatonic curves with group Z2^2 x| Z_m"};
  RunSpec spec;
  std::string command, format = "json";
  std::optional<std::string> config_path, cache_dir;
  std::optional<int> jobs;
  bool no_cache = false;
  cli.add_option("command", command, "signature, classify-h, verify-curve, chartable, decompose, maximality, "
                                     "descent, fermat-action, census or full")
      ->required();
  cli.add_option("--m", spec.m, "order of the cyclic factor");
  cli.add_option("--q", spec.q, "case 1 parameter, m = 2q");
  cli.add_option("--l", spec.l, "case 2 parameter, m = 3l (2a) or 4l (2b)");
  cli.add_option("--case", spec.kase, "1, 2a or 2b");
  cli.add_option("--action", spec.action, "i or ii");
  cli.add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  cli.add_option("--config", config_path, "key = value config file");
  cli.add_option("--cache-dir", cache_dir, "report cache directory");
  cli.add_option("--jobs", jobs, "parallel sections for full")->check(CLI::PositiveNumber);
  cli.add_flag("--no-cache", no_cache, "always recompute");
  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = cli.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Config cfg = load_config(config_path ? std::optional<std::filesystem::path>(*config_path) : std::nullopt);
    if (cache_dir) cfg.cache_dir = *cache_dir;
    if (jobs) cfg.jobs = *jobs;
    spec.command = command;
    spec.format = format == "md" ? Format::Markdown : Format::Json;
    spec.use_cache = !no_cache;
    spec = validate(spec);

    auto start = std::chrono::steady_clock::now();
    Cache cache(cfg.cache_dir);
    std::optional<Report> report;
    if (spec.use_cache) {
      std::string warning;
      report = cache.lookup(spec, &warning);
      if (!warning.empty()) std::cerr << "warning: " << warning << ", recomputing\n";
      if (report) std::cerr << "cache hit " << cache.entry_path(spec).string() << "\n";
    }
    if (!report) {
      report = dispatch(spec, cfg);
      if (spec.use_cache) {
        try {
          cache.store(*report);
        } catch (const std::exception& e) {
          std::cerr << "warning: cache not written: " << e.what() << "\n";
        }
      }
    }
    std::cout << (spec.format == Format::Markdown ? report->to_markdown() : report->to_json());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "time " << secs << " s\n";
    return report->passed() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << error_name(e.code()) << ": " << e.what() << "\n";
    return is_usage(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
