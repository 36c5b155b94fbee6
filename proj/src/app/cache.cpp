#include "qplab/app/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdint>
#include <fstream>
#include <sstream>

#include "qplab/errors.hpp"

namespace qplab::app {

namespace fs = std::filesystem;

std::string content_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream o;
  o << std::hex;
  o.width(16);
  o.fill('0');
  o << h;
  return o.str();
}

Cache::Cache(fs::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {}

std::string Cache::key(const RunSpec& spec) const { return content_hash(spec.to_json().dump() + "\n" + version_); }

fs::path Cache::entry_path(const RunSpec& spec) const { return dir_ / (key(spec) + ".json"); }

std::optional<Report> Cache::lookup(const RunSpec& spec, std::string* warning) const {
  fs::path p = entry_path(spec);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    std::ostringstream s;
    s << in.rdbuf();
    Json e = Json::parse(s.str());
    const Json& body = e.at("report");
    const std::string md = e.at("markdown").get<std::string>();
    if (e.at("key").get<std::string>() != key(spec) || e.at("version").get<std::string>() != version_)
      throw Error(ErrorCode::CacheCorrupt, "entry belongs to another spec or version");
    if (e.at("checksum").get<std::string>() != content_hash(body.dump() + md))
      throw Error(ErrorCode::CacheCorrupt, "checksum mismatch");
    Report r = Report::from_cache(body, md, spec);
    if (r.body() != body) throw Error(ErrorCode::CacheCorrupt, "entry does not round-trip");
    return r;
  } catch (const std::exception& ex) {
    if (warning) *warning = std::string("CacheCorrupt: ") + p.string() + ": " + ex.what();
    return std::nullopt;
  }
}

void Cache::store(const Report& report) const {
  fs::create_directories(dir_);
  Json body = report.body();
  Json e{{"key", key(report.spec)},
         {"version", version_},
         {"report", body},
         {"markdown", report.markdown},
         {"checksum", content_hash(body.dump() + report.markdown)}};
  // advisory lock; concurrent writers of one key write identical content
  int fd = ::open((dir_ / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
  if (fd >= 0) ::flock(fd, LOCK_EX);
  fs::path target = entry_path(report.spec);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << e.dump() << "\n";
  }
  fs::rename(tmp, target);
  if (fd >= 0) {
    ::flock(fd, LOCK_UN);
    ::close(fd);
  }
}

}  // namespace qplab::app
