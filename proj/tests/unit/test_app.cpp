#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qplab/app/cache.hpp"
#include "qplab/app/commands.hpp"
#include "qplab/app/config.hpp"

using namespace qplab::app;
namespace fs = std::filesystem;

namespace {

RunSpec spec(std::string cmd) {
  RunSpec s;
  s.command = std::move(cmd);
  return s;
}

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("qplab-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

bool all_anchored(const Report& r) {
  for (const auto& c : r.checks)
    if (c.paper_anchor.empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("validation fills in case parameters") {
  auto s = spec("verify-curve");
  s.kase = "2a";
  s.m = 9;
  auto v = validate(s);
  CHECK(*v.l == 3);
  s.kase = "1";
  s.m = 10;
  CHECK(*validate(s).q == 5);
  s.kase = "2b";
  s.m = std::nullopt;
  s.l = 2;
  CHECK(*validate(s).m == 8);

  auto bad = spec("verify-curve");
  bad.kase = "2a";
  bad.m = 7;
  CHECK_THROWS_AS(validate(bad), UsageError);
  bad.kase = "1";
  bad.m = std::nullopt;
  bad.q = 4;
  CHECK_THROWS_AS(validate(bad), UsageError);
  bad.q = 3;
  bad.m = 8;
  CHECK_THROWS_AS(validate(bad), UsageError);
  CHECK_THROWS_AS(validate(spec("nonsense")), UsageError);
  CHECK_THROWS_AS(validate(spec("signature")), UsageError);
  auto d = spec("descent");
  d.l = 3;
  CHECK_THROWS_AS(validate(d), UsageError);
  auto ch = spec("chartable");
  ch.m = 9;
  ch.action = "i";
  CHECK_THROWS_AS(validate(ch), UsageError);
  auto big = spec("census");
  big.m = 60;
  CHECK_THROWS_AS(validate(big), UsageError);
}

TEST_CASE("commands") {
  SUBCASE("classify-h with m = 7 is empty and passes") {
    auto s = spec("classify-h");
    s.m = 7;
    auto r = dispatch(s);
    CHECK(r.passed());
    CHECK(r.details["subspaces"].empty());
  }
  SUBCASE("verify-curve case 2a, m = 6") {
    auto s = spec("verify-curve");
    s.kase = "2a";
    s.m = 6;
    auto r = dispatch(s);
    CHECK(r.passed());
    CHECK(all_anchored(r));
    CHECK(r.checks.size() > 15);
  }
  SUBCASE("decompose case 2a, m = 6") {
    auto s = spec("decompose");
    s.kase = "2a";
    s.m = 6;
    auto r = dispatch(s);
    CHECK(r.passed());
    std::string summary = r.details["summary"];
    CHECK(summary.find("^3, dim") != std::string::npos);
    CHECK(summary.find("dim B6 = 1") != std::string::npos);
    CHECK(summary.find("<a>") != std::string::npos);
  }
  SUBCASE("a refuted claim yields a failing report") {
    auto s = spec("maximality");
    s.kase = "1";
    s.q = 3;
    auto r = dispatch(s);
    CHECK_FALSE(r.passed());
    CHECK(r.details["normal"] == true);
    CHECK(r.body()["summary"] == "fail");
  }
  SUBCASE("identical specs give identical bytes") {
    auto s = spec("chartable");
    s.m = 6;
    CHECK(dispatch(s).to_json() == dispatch(s).to_json());
    CHECK(dispatch(s).to_markdown() == dispatch(s).to_markdown());
  }
  SUBCASE("format does not enter the report") {
    auto s = spec("signature");
    s.m = 8;
    auto t = s;
    t.format = Format::Markdown;
    CHECK(dispatch(s).to_json() == dispatch(t).to_json());
  }
}

TEST_CASE("cache") {
  fs::path dir = fresh_dir("cache");
  Cache cache(dir);
  auto s = validate([] {
    auto x = spec("chartable");
    x.m = 6;
    return x;
  }());
  CHECK_FALSE(cache.lookup(s));
  Report r = dispatch(s);
  cache.store(r);
  auto hit = cache.lookup(s);
  REQUIRE(hit);
  CHECK(hit->to_json() == r.to_json());
  CHECK(hit->to_markdown() == r.to_markdown());

  SUBCASE("a version bump misses") {
    Cache bumped(dir, "9.9.9");
    CHECK_FALSE(bumped.lookup(s));
    CHECK(bumped.key(s) != cache.key(s));
  }
  SUBCASE("a corrupted entry is reported and overwritten") {
    {
      std::ofstream out(cache.entry_path(s));
      out << "{\"key\": 1";
    }
    std::string warning;
    CHECK_FALSE(cache.lookup(s, &warning));
    CHECK(warning.find("CacheCorrupt") != std::string::npos);
    cache.store(dispatch(s));
    auto again = cache.lookup(s);
    REQUIRE(again);
    CHECK(again->to_json() == r.to_json());
  }
  SUBCASE("a tampered report fails the checksum") {
    std::ifstream in(cache.entry_path(s));
    Json e = Json::parse(in);
    in.close();
    e["report"]["summary"] = "fail";
    std::ofstream(cache.entry_path(s)) << e.dump();
    std::string warning;
    CHECK_FALSE(cache.lookup(s, &warning));
    CHECK(warning.find("checksum") != std::string::npos);
  }
  SUBCASE("keys ignore format and cache policy") {
    auto t = s;
    t.format = Format::Markdown;
    t.use_cache = false;
    CHECK(cache.key(t) == cache.key(s));
    auto u = s;
    u.m = 12;
    CHECK(cache.key(u) != cache.key(s));
  }
  fs::remove_all(dir);
}

TEST_CASE("content hash") {
  CHECK(content_hash("") == "cbf29ce484222325");
  CHECK(content_hash("a") == "af63dc4c8601ec8c");
}

TEST_CASE("config") {
  auto c = parse_config("# comment\ncache_dir = \"/tmp/x\"\ncoset_limit=5000  # inline\n\njobs = 4\n");
  CHECK(c.cache_dir == "/tmp/x");
  CHECK(c.coset_limit == 5000);
  CHECK(c.jobs == 4);
  CHECK(parse_config("").jobs == 1);
  CHECK_THROWS_AS(parse_config("colour = red"), UsageError);
  CHECK_THROWS_AS(parse_config("jobs = -2"), UsageError);
  CHECK_THROWS_AS(parse_config("jobs"), UsageError);
  CHECK_THROWS_AS(load_config(fs::path("/nonexistent/qplab.toml")), UsageError);

  fs::path dir = fresh_dir("config");
  fs::create_directories(dir);
  std::ofstream(dir / "q.toml") << "cache_dir = /from/file\njobs = 2\n";
  ::unsetenv("QPLAB_CACHE");
  CHECK(load_config(dir / "q.toml").cache_dir == "/from/file");
  ::setenv("QPLAB_CACHE", "/from/env", 1);
  auto e = load_config(dir / "q.toml");
  CHECK(e.cache_dir == "/from/env");
  CHECK(e.jobs == 2);
  ::unsetenv("QPLAB_CACHE");
  fs::remove_all(dir);
}

TEST_CASE("full report for m = 6 touches every module") {
  auto s = spec("full");
  s.m = 6;
  Config cfg;
  cfg.jobs = 3;
  auto r = dispatch(s, cfg);
  CHECK(all_anchored(r));
  for (const char* section : {"signature", "classify-h", "chartable ii", "census", "verify-curve 1", "verify-curve 2a",
                              "decompose 2a", "maximality 1", "fermat-action", "descent 2a"})
    CHECK_MESSAGE(r.details.contains(section), section);
  // the only failures are the maximality and uniqueness claims that computation refutes
  for (const auto& c : r.checks)
    if (c.verdict == Verdict::Fail) CHECK(c.name.rfind("maximality", 0) == 0);
  Config serial;
  CHECK(dispatch(s, serial).to_json() == r.to_json());
}
