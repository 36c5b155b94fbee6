#include "qplab/app/report.hpp"

#include <sstream>

namespace qplab::app {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Info: return "info";
  }
  return "info";
}

namespace {

Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  return Verdict::Info;
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

Json RunSpec::to_json() const {
  return Json{{"command", command}, {"m", opt(m)}, {"q", opt(q)}, {"l", opt(l)}, {"case", opt(kase)},
              {"action", opt(action)}};
}

void Report::add(std::string name, std::string anchor, bool pass, std::string witness) {
  checks.push_back({std::move(name), std::move(anchor), pass ? Verdict::Pass : Verdict::Fail, std::move(witness)});
}

void Report::info(std::string name, std::string anchor, std::string witness) {
  checks.push_back({std::move(name), std::move(anchor), Verdict::Info, std::move(witness)});
}

void Report::merge(const Report& other, const std::string& section) {
  for (auto c : other.checks) {
    c.name = section + ": " + c.name;
    checks.push_back(std::move(c));
  }
  details[section] = other.details;
  if (!other.markdown.empty()) markdown += "## " + section + "\n\n" + other.markdown + "\n";
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (c.verdict == Verdict::Fail) return false;
  return true;
}

Json Report::body() const {
  Json cs = Json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"paper_anchor", c.paper_anchor}, {"verdict", to_string(c.verdict)},
                  {"witness", c.witness}});
  return Json{{"spec", spec.to_json()},
              {"checks", cs},
              {"summary", passed() ? "pass" : "fail"},
              {"version", version},
              {"details", details}};
}

std::string Report::to_json() const { return body().dump(2) + "\n"; }

std::string Report::to_markdown() const {
  std::ostringstream o;
  o << "# qplab " << spec.command;
  auto sj = spec.to_json();
  for (const char* k : {"case", "m", "q", "l", "action"})
    if (!sj[k].is_null()) o << " " << k << "=" << (sj[k].is_string() ? sj[k].get<std::string>() : sj[k].dump());
  o << "\n\nsummary: **" << (passed() ? "pass" : "fail") << "** (version " << version << ")\n\n";
  o << "| check | anchor | verdict | witness |\n|---|---|---|---|\n";
  for (const auto& c : checks)
    o << "| " << md_cell(c.name) << " | " << md_cell(c.paper_anchor) << " | " << to_string(c.verdict) << " | "
      << md_cell(c.witness) << " |\n";
  if (!markdown.empty()) o << "\n" << markdown;
  return o.str();
}

Report Report::from_cache(const Json& body, const std::string& markdown, const RunSpec& spec) {
  Report r;
  r.spec = spec;
  r.version = body.at("version").get<std::string>();
  for (const auto& c : body.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("paper_anchor").get<std::string>(),
                        parse_verdict(c.at("verdict").get<std::string>()), c.at("witness").get<std::string>()});
  r.details = body.at("details");
  r.markdown = markdown;
  return r;
}

}  // namespace qplab::app
