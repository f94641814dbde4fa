#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "green.hpp"
#include "hopf.hpp"
#include "modl.hpp"

namespace paraq {

Rational spot_root(const std::string& q_text) {
  Int num, den(1);
  auto slash = q_text.find('/');
  try {
    if (slash == std::string::npos) {
      num = Int(q_text);
    } else {
      num = Int(q_text.substr(0, slash));
      den = Int(q_text.substr(slash + 1));
    }
  } catch (...) {
    throw UsageError("cannot parse rational: " + q_text);
  }
  if (den == 0) throw UsageError("zero denominator in q");
  if (num <= 0 || den < 0) throw UsageError("spot q must be positive");
  auto isqrt_exact = [](const Int& v, Int* root) {
    Int r = boost::multiprecision::sqrt(v);
    if (r * r != v) return false;
    *root = r;
    return true;
  };
  Int rn, rd;
  if (!isqrt_exact(num, &rn) || !isqrt_exact(den, &rd))
    throw UsageError("spot q must be a perfect square of a rational (s = q^(1/2) stays rational)");
  Rational s0(rn, rd);
  if (s0 == 1) throw UsageError("spot q = 1 is excluded (bracket denominators vanish)");
  return s0;
}

namespace {

struct SuiteSet {
  bool classical{false}, relations{false}, hopf{false}, green{false},
      module_l{false};
};

SuiteSet parse_suites(const std::vector<std::string>& names) {
  SuiteSet s;
  for (const auto& n : names) {
    if (n == "all") {
      s.classical = s.relations = s.hopf = s.green = s.module_l = true;
    } else if (n == "classical") {
      s.classical = true;
    } else if (n == "relations") {
      s.relations = true;
    } else if (n == "hopf") {
      s.hopf = true;
    } else if (n == "green") {
      s.green = true;
    } else if (n == "module-l") {
      s.module_l = true;
    }
  }
  return s;
}

// Test hook: flips the sign of one term of the named instance so the
// verification pipeline demonstrably detects a perturbed catalog.
void apply_corruption(const std::string& spec, std::vector<RelationInstance>& rels) {
  if (spec.empty()) return;
  auto colon = spec.rfind(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> idx;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      idx.push_back(std::stoi(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  for (auto& r : rels) {
    if (r.name != name || r.indices != idx) continue;
    if (r.element.is_zero()) continue;
    auto first = *r.element.terms().begin();
    r.element.add_term(first.first, first.second * ScalarQ(-2));
  }
}

struct ConvDecision {
  SigmaChoice sigma;
  StarConvention star{StarConvention::plain};
  std::string sigma_desc, star_desc;
  std::vector<CheckRecord> records;
};

bool all_vanish(const std::vector<RelationInstance>& rels,
                const OscillatorRep& rep) {
  for (const auto& r : rels) {
    auto cols = margin_safe_columns(rep, r.element);
    Verdict v = check_zero_on_columns(evaluate(r.element, rep), cols,
                                      Evaluator::exact());
    if (!v.pass) return false;
  }
  return true;
}

ConvDecision decide_conventions(const RunConfig& cfg, const OscillatorRep& rep) {
  ConvDecision d;
  const Family f = rep.family();
  const int n = rep.modes();

  if (cfg.sigma != "auto") {
    SigmaSign s = cfg.sigma == "plus" ? SigmaSign::plus : SigmaSign::minus;
    d.sigma = {s, s};
    d.sigma_desc = cfg.sigma;
    d.records.push_back({"relations", "sigma.select", {}, true,
                         "", "sign convention forced by configuration"});
  } else {
    std::vector<SigmaSign> surv_i, surv_istar;
    for (SigmaSign s : {SigmaSign::plus, SigmaSign::minus}) {
      if (all_vanish(relations_eq_i(n, f, s), rep)) surv_i.push_back(s);
      if (all_vanish(relations_eq_istar(n, f, s), rep)) surv_istar.push_back(s);
    }
    auto join = [](const std::vector<SigmaSign>& v) {
      std::string s;
      for (size_t k = 0; k < v.size(); ++k)
        s += std::string(k ? "," : "") + sigma_name(v[k]);
      return s.empty() ? std::string("none") : s;
    };
    d.sigma_desc = "I:" + join(surv_i) + ";Istar:" + join(surv_istar);
    bool ok = !surv_i.empty() && !surv_istar.empty();
    d.sigma = {ok ? surv_i.front() : SigmaSign::plus,
               ok ? surv_istar.front() : SigmaSign::plus};
    d.records.push_back({"relations", "sigma.select", {}, ok,
                         ok ? "" : "no sign assignment satisfies the catalog: " + d.sigma_desc,
                         "sign assignments under which the twisted families vanish"});
  }

  auto star_consistent = [&](StarConvention sc) {
    auto rels = theorem1_relations(n, f, d.sigma);
    for (const auto& r : rels) {
      FreeElem st = r.element.star(sc);
      auto cols = margin_safe_columns(rep, st);
      Verdict v =
          check_zero_on_columns(evaluate(st, rep), cols, Evaluator::exact());
      if (!v.pass) return false;
    }
    // Starred raise-side cubic relations must reproduce the lower-side
    // catalog entries up to a unit.
    std::map<std::vector<int>, const RelationInstance*> lower_side;
    for (const auto& r : rels)
      if ((r.name == "thm1.II" || r.name == "thm1.IIstar") && r.indices[0] == -1)
        lower_side[{r.name == "thm1.II" ? 0 : 1, r.indices[1], r.indices[2],
                    r.indices[3]}] = &r;
    for (const auto& r : rels) {
      if ((r.name != "thm1.II" && r.name != "thm1.IIstar") || r.indices[0] != 1)
        continue;
      auto it = lower_side.find({r.name == "thm1.II" ? 0 : 1, r.indices[1],
                                 r.indices[2], r.indices[3]});
      if (it == lower_side.end()) return false;
      if (!r.element.star(sc).proportional_to(it->second->element)) return false;
    }
    return true;
  };

  if (cfg.star != "auto") {
    d.star = cfg.star == "plain" ? StarConvention::plain : StarConvention::graded;
    d.star_desc = cfg.star;
    d.records.push_back({"relations", "star.select", {}, true,
                         "", "reversal convention forced by configuration"});
  } else {
    std::vector<StarConvention> surv;
    for (StarConvention sc : {StarConvention::plain, StarConvention::graded})
      if (star_consistent(sc)) surv.push_back(sc);
    std::string desc;
    for (size_t k = 0; k < surv.size(); ++k)
      desc += std::string(k ? "," : "") +
              (surv[k] == StarConvention::plain ? "plain" : "graded");
    if (desc.empty()) desc = "none";
    d.star_desc = desc;
    bool ok = !surv.empty();
    d.star = ok ? surv.front() : StarConvention::plain;
    d.records.push_back({"relations", "star.select", {}, ok,
                         ok ? "" : "no reversal convention keeps the catalog star-stable",
                         "star conventions under which starred relations vanish"});
  }
  return d;
}

using Task = std::function<std::vector<CheckRecord>()>;

std::vector<CheckRecord> run_tasks(std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<CheckRecord>> results(tasks.size());
  if (jobs <= 1) {
    for (size_t k = 0; k < tasks.size(); ++k) results[k] = tasks[k]();
  } else {
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (;;) {
        size_t k = next.fetch_add(1);
        if (k >= tasks.size()) break;
        results[k] = tasks[k]();
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::vector<CheckRecord> out;
  for (auto& r : results)
    for (auto& c : r) out.push_back(std::move(c));
  return out;
}

std::vector<CheckRecord> tag(const std::string& suite,
                             std::vector<CheckResult> rs) {
  std::vector<CheckRecord> out;
  out.reserve(rs.size());
  for (auto& r : rs)
    out.push_back({suite, std::move(r.name), std::move(r.indices), r.pass,
                   std::move(r.residual), std::move(r.ref)});
  return out;
}

}  // namespace

Report run_suites(const RunConfig& cfg) {
  cfg.validate();
  const SuiteSet suites = parse_suites(cfg.suites);
  const Family family = cfg.family_enum();
  const int n = cfg.modes;

  OscillatorRep rep = OscillatorRep::build(family, n, cfg.cutoff);

  Evaluator main_ev = Evaluator::exact();
  std::optional<OscillatorRep> spot_rep;
  if (!cfg.q.empty()) {
    Rational s0 = spot_root(cfg.q);
    spot_rep = rep.specialized(s0);
    main_ev = Evaluator::at(s0);
  }
  const OscillatorRep& eval_rep = spot_rep ? *spot_rep : rep;

  ConvDecision conv = decide_conventions(cfg, rep);

  auto thm1 = theorem1_relations(n, family, conv.sigma);
  auto classical = classical_relations(n, family);
  auto quea = chevalley_relations(n, family);
  apply_corruption(cfg.corrupt, thm1);
  apply_corruption(cfg.corrupt, classical);
  apply_corruption(cfg.corrupt, quea);

  std::vector<Task> tasks;

  auto instance_task = [&](const std::string& suite, const RelationInstance& r,
                           const OscillatorRep& in_rep, Evaluator ev,
                           std::string name_prefix) {
    tasks.push_back([&suite0 = suite, &r, &in_rep, ev,
                     prefix = std::move(name_prefix)]() mutable
                    -> std::vector<CheckRecord> {
      auto cols = margin_safe_columns(in_rep, r.element);
      Verdict v =
          check_zero_on_columns(evaluate(r.element, in_rep), cols, ev);
      return {{suite0, prefix + r.name, r.indices, v.pass, v.residual, r.ref}};
    });
  };

  std::optional<OscillatorRep> crep;
  if (suites.classical) crep = rep.classicalized();

  std::vector<CheckRecord> records;
  for (auto& c : conv.records)
    if (suites.relations) records.push_back(c);

  static const std::string kRelations = "relations";
  static const std::string kClassical = "classical";

  if (suites.relations) {
    tasks.push_back([&eval_rep, main_ev] {
      return tag("relations", verify_oscillator_relations(eval_rep, main_ev));
    });
    for (const auto& r : thm1) instance_task(kRelations, r, eval_rep, main_ev, "");
    for (const auto& r : quea) instance_task(kRelations, r, eval_rep, main_ev, "");
    tasks.push_back([n, family, sc = conv.star] {
      return tag("relations", lmatrix_structure_checks(n, family, sc));
    });
  }

  if (suites.classical) {
    const Evaluator at_one = Evaluator::at(Rational(1));
    for (const auto& r : classical)
      instance_task(kClassical, r, *crep, at_one, "");
    for (const auto& r : thm1)
      instance_task(kClassical, r, *crep, at_one, "limit.");
  }

  HopfOps hopf(family, n);
  if (suites.hopf) {
    tasks.push_back([&hopf, &eval_rep, main_ev] {
      return tag("hopf", hopf_axiom_checks(hopf, eval_rep, main_ev));
    });
    for (const auto& r : thm1) {
      tasks.push_back([&hopf, &r, &eval_rep, main_ev] {
        return tag("hopf",
                   hopf_ideal_checks(hopf, std::vector<RelationInstance>{r},
                                     eval_rep, main_ev));
      });
    }
    tasks.push_back([&hopf, &eval_rep, main_ev] {
      return tag("hopf", lmatrix_coproduct_checks(hopf, eval_rep, main_ev));
    });
  }

  std::optional<GreenSystem> green;
  std::optional<GreenSystem> green_sym;
  if (suites.green) {
    green.emplace(eval_rep, cfg.order);
    green_sym.emplace(rep, cfg.order);
    tasks.push_back([&green, &eval_rep, main_ev] {
      return tag("green", green->check_sum(main_ev, eval_rep));
    });
    tasks.push_back([&green, main_ev] {
      return tag("green", green->check_vacuum(main_ev));
    });
    tasks.push_back([&green, &eval_rep, main_ev] {
      return tag("green", green->check_anomalous(main_ev, eval_rep, false));
    });
    tasks.push_back([&green, main_ev] {
      return tag("green", green->check_qops(main_ev));
    });
    tasks.push_back([&green] { return tag("green", green->check_closure()); });
    tasks.push_back([&green_sym, &rep] {
      auto all = green_sym->check_anomalous(Evaluator::at(Rational(1)),
                                            rep.classicalized(), true);
      std::vector<CheckResult> corr;
      for (auto& r : all)
        if (r.name.rfind("green.anomalous.correction.", 0) == 0)
          corr.push_back(std::move(r));
      return tag("green", std::move(corr));
    });
    tasks.push_back([&green_sym] {
      return tag("green", green_sym->check_classical());
    });
  }

  if (suites.module_l && n >= 2) {
    tasks.push_back([n, family] { return tag("module-l", module_checks(n, family)); });
    tasks.push_back([n, family, &eval_rep, main_ev] {
      return tag("module-l", serre_vanishing_checks(n, family, eval_rep, main_ev));
    });
  }

  auto task_records = run_tasks(tasks, cfg.jobs);
  for (auto& c : task_records) records.push_back(std::move(c));

  std::sort(records.begin(), records.end(),
            [](const CheckRecord& a, const CheckRecord& b) {
              if (a.suite != b.suite) return a.suite < b.suite;
              if (a.name != b.name) return a.name < b.name;
              return a.indices < b.indices;
            });

  Report rep_out;
  rep_out.config = cfg;
  rep_out.checks = std::move(records);
  rep_out.sigma_convention = conv.sigma_desc;
  rep_out.star_convention = conv.star_desc;
  return rep_out;
}

}  // namespace paraq
