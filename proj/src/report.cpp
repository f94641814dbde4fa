#include "report.hpp"

#include <json.hpp>
#include <sstream>

namespace paraq {

Family RunConfig::family_enum() const {
  if (family == "parafermi") return Family::parafermi;
  if (family == "parabose") return Family::parabose;
  throw UsageError("unknown family: " + family);
}

void RunConfig::validate() const {
  family_enum();
  if (modes < 1) throw UsageError("modes must be >= 1");
  if (order < 1) throw UsageError("order must be >= 1");
  if (cutoff < 1) throw UsageError("cutoff must be >= 1");
  if (jobs < 1) throw UsageError("jobs must be >= 1");
  if (sigma != "plus" && sigma != "minus" && sigma != "auto")
    throw UsageError("sigma must be plus, minus or auto");
  if (star != "plain" && star != "graded" && star != "auto")
    throw UsageError("star must be plain, graded or auto");
  if (format != "text" && format != "json")
    throw UsageError("format must be text or json");
  static const char* known[] = {"all",  "classical", "relations",
                                "hopf", "green",     "module-l"};
  for (const auto& s : suites) {
    bool ok = false;
    for (const char* k : known) ok = ok || s == k;
    if (!ok) throw UsageError("unknown suite: " + s);
  }
  if (suites.empty()) throw UsageError("no suite selected");
}

int Report::pass_count() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

int Report::fail_count() const {
  return static_cast<int>(checks.size()) - pass_count();
}

namespace {

std::string indices_str(const std::vector<int>& ix) {
  std::string s = "[";
  for (size_t k = 0; k < ix.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(ix[k]);
  }
  return s + "]";
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream os;
  os << "paraq verification report\n";
  os << "config: family=" << config.family << " modes=" << config.modes
     << " order=" << config.order << " cutoff=" << config.cutoff << " suite=";
  for (size_t k = 0; k < config.suites.size(); ++k)
    os << (k ? "," : "") << config.suites[k];
  os << " sigma=" << config.sigma << " star=" << config.star;
  if (!config.q.empty()) os << " q=" << config.q;
  os << " jobs=" << config.jobs << "\n\n";
  for (const auto& c : checks) {
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.suite << " " << c.name << " "
       << indices_str(c.indices);
    if (!c.pass && !c.residual.empty()) os << " residual: " << c.residual;
    os << "\n";
  }
  os << "\nsummary: pass=" << pass_count() << " fail=" << fail_count() << "\n";
  os << "conventions: sigma=" << sigma_convention << " star=" << star_convention
     << "\n";
  return os.str();
}

std::string Report::render_json() const {
  nlohmann::ordered_json j;
  j["config"] = {{"family", config.family}, {"modes", config.modes},
                 {"order", config.order},   {"cutoff", config.cutoff},
                 {"suite", config.suites},  {"sigma", config.sigma},
                 {"star", config.star},     {"q", config.q},
                 {"format", config.format}, {"jobs", config.jobs}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json rec;
    rec["suite"] = c.suite;
    rec["name"] = c.name;
    rec["indices"] = c.indices;
    rec["status"] = c.pass ? "pass" : "fail";
    if (c.pass)
      rec["residual"] = nullptr;
    else
      rec["residual"] = c.residual;
    rec["paper_ref"] = c.ref;
    j["checks"].push_back(std::move(rec));
  }
  j["summary"] = {{"pass", pass_count()}, {"fail", fail_count()}};
  j["conventions"] = {{"sigma", sigma_convention}, {"star", star_convention}};
  return j.dump(2) + "\n";
}

}  // namespace paraq
