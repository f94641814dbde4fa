// Batch verification harness for the deformed parastatistics engine.
// Talks to the engine exclusively through the C API.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "paraq/paraq.h"

int main(int argc, char** argv) {
  CLI::App app{"paraq: exact verification of deformed parastatistics algebras"};

  std::string family = "parafermi";
  int modes = 2, order = 2, cutoff = 6, jobs = 0;
  std::string suite = "all", sigma = "auto", star = "auto", q, format = "text",
              out, corrupt;

  app.add_option("--family", family, "algebra family: parafermi|parabose")
      ->check(CLI::IsMember({"parafermi", "parabose"}));
  app.add_option("--modes", modes, "number of oscillator modes N");
  app.add_option("--order", order, "tensor order P for the ansatz suites");
  app.add_option("--cutoff", cutoff, "occupation cutoff D for the bose flavor");
  app.add_option("--suite", suite,
                 "comma list of classical,relations,hopf,green,module-l or all");
  app.add_option("--sigma", sigma, "sign convention: plus|minus|auto")
      ->check(CLI::IsMember({"plus", "minus", "auto"}));
  app.add_option("--star", star, "star reversal convention: plain|graded|auto")
      ->check(CLI::IsMember({"plain", "graded", "auto"}));
  app.add_option("--q", q, "optional rational spot value of q (perfect square)");
  app.add_option("--format", format, "report format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "write the report to this path instead of stdout");
  app.add_option("--jobs", jobs, "worker threads (default 1 or PARAQ_JOBS)");
  app.add_option("--corrupt", corrupt,
                 "test hook: perturb one catalog instance, e.g. thm1.I:1,2,2")
      ->group("");  // hidden from --help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (jobs <= 0) {
    const char* env = std::getenv("PARAQ_JOBS");
    jobs = env ? std::atoi(env) : 1;
    if (jobs <= 0) jobs = 1;
  }

  paraq_config* cfg = paraq_config_new();
  auto set = [&](const char* k, const std::string& v) {
    if (paraq_config_set(cfg, k, v.c_str()) != PARAQ_OK) {
      std::cerr << "paraq: " << paraq_last_error() << "\n";
      paraq_config_free(cfg);
      std::exit(2);
    }
  };
  set("family", family);
  set("modes", std::to_string(modes));
  set("order", std::to_string(order));
  set("cutoff", std::to_string(cutoff));
  set("suite", suite);
  set("sigma", sigma);
  set("star", star);
  if (!q.empty()) set("q", q);
  set("format", format);
  set("jobs", std::to_string(jobs));
  if (!corrupt.empty()) set("corrupt", corrupt);

  paraq_status status = PARAQ_OK;
  paraq_report* rep = paraq_run(cfg, &status);
  if (!rep) {
    std::cerr << "paraq: " << paraq_last_error() << "\n";
    paraq_config_free(cfg);
    return status == PARAQ_ERR_USAGE ? 2 : 1;
  }

  const std::string rendered = paraq_report_render(rep);
  if (out.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "paraq: cannot write " << out << "\n";
      paraq_report_free(rep);
      paraq_config_free(cfg);
      return 2;
    }
    f << rendered;
  }

  const int fails = paraq_report_fail_count(rep);
  std::cerr << "paraq: " << paraq_report_pass_count(rep) << " passed, " << fails
            << " failed\n";
  paraq_report_free(rep);
  paraq_config_free(cfg);
  return fails == 0 ? 0 : 1;
}
