#include "paraq/paraq.h"

#include <cstring>
#include <string>

#include "runner.hpp"

struct paraq_config {
  paraq::RunConfig cfg;
};

struct paraq_report {
  paraq::Report rep;
  std::string rendered;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& msg) { t_last_error = msg; }

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= v.size()) {
    size_t comma = v.find(',', pos);
    if (comma == std::string::npos) comma = v.size();
    if (comma > pos) out.push_back(v.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

paraq_config* paraq_config_new(void) { return new paraq_config(); }

void paraq_config_free(paraq_config* cfg) { delete cfg; }

paraq_status paraq_config_set(paraq_config* cfg, const char* key,
                              const char* value) {
  if (!cfg || !key || !value) {
    set_error("null argument");
    return PARAQ_ERR_USAGE;
  }
  try {
    std::string k(key), v(value);
    auto& c = cfg->cfg;
    if (k == "family")
      c.family = v;
    else if (k == "modes")
      c.modes = std::stoi(v);
    else if (k == "order")
      c.order = std::stoi(v);
    else if (k == "cutoff")
      c.cutoff = std::stoi(v);
    else if (k == "suite")
      c.suites = split_list(v);
    else if (k == "sigma")
      c.sigma = v;
    else if (k == "star")
      c.star = v;
    else if (k == "q")
      c.q = v;
    else if (k == "format")
      c.format = v;
    else if (k == "jobs")
      c.jobs = std::stoi(v);
    else if (k == "corrupt")
      c.corrupt = v;
    else {
      set_error("unknown configuration key: " + k);
      return PARAQ_ERR_USAGE;
    }
    return PARAQ_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return PARAQ_ERR_USAGE;
  }
}

paraq_report* paraq_run(const paraq_config* cfg, paraq_status* status) {
  auto fail = [&](paraq_status st, const std::string& msg) {
    set_error(msg);
    if (status) *status = st;
    return static_cast<paraq_report*>(nullptr);
  };
  if (!cfg) return fail(PARAQ_ERR_USAGE, "null configuration");
  try {
    auto out = new paraq_report();
    out->rep = paraq::run_suites(cfg->cfg);
    out->rendered = out->rep.render();
    if (status) *status = PARAQ_OK;
    return out;
  } catch (const paraq::UsageError& e) {
    return fail(PARAQ_ERR_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(PARAQ_ERR_INTERNAL, e.what());
  }
}

void paraq_report_free(paraq_report* rep) { delete rep; }

int paraq_report_pass_count(const paraq_report* rep) {
  return rep ? rep->rep.pass_count() : 0;
}

int paraq_report_fail_count(const paraq_report* rep) {
  return rep ? rep->rep.fail_count() : 0;
}

const char* paraq_report_render(const paraq_report* rep) {
  return rep ? rep->rendered.c_str() : "";
}

const char* paraq_last_error(void) { return t_last_error.c_str(); }

}  // extern "C"
