#pragma once

#include <optional>
#include <string>
#include <vector>

#include "words.hpp"

namespace paraq {

struct RunConfig {
  std::string family = "parafermi";  // parafermi | parabose
  int modes = 2;
  int order = 2;
  int cutoff = 6;
  std::vector<std::string> suites = {"all"};
  std::string sigma = "auto";  // plus | minus | auto
  std::string star = "auto";   // plain | graded | auto
  std::string q;               // optional rational spot point for q
  std::string format = "text";  // text | json
  std::string out;             // report path; empty writes to stdout
  int jobs = 1;
  std::string corrupt;  // test hook: "<name>:<i,j,...>" perturbs one instance

  Family family_enum() const;
  void validate() const;  // throws UsageError
};

struct CheckRecord {
  std::string suite;
  std::string name;
  std::vector<int> indices;
  bool pass{true};
  std::string residual;
  std::string ref;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;
  std::string sigma_convention;  // surviving / forced assignment
  std::string star_convention;

  int pass_count() const;
  int fail_count() const;
  // Deterministic renderings: no timing, no environment data, so equal
  // configurations produce byte-identical reports.
  std::string render_text() const;
  std::string render_json() const;
  std::string render() const {
    return config.format == "json" ? render_json() : render_text();
  }
};

Report run_suites(const RunConfig& cfg);

}  // namespace paraq
