#include "green.hpp"

#include <set>

namespace paraq {

namespace {

ScalarQ qq() { return ScalarQ::spow(2) - ScalarQ::spow(-2); }  // q - q^-1

}  // namespace

GreenSystem::GreenSystem(const OscillatorRep& rep, int order)
    : rep_(&rep),
      order_(order),
      hopf_(rep.family(), rep.modes()),
      lplus_(lmatrix_plus(rep.modes(), rep.family())),
      lminus_(lmatrix_minus(rep.modes(), rep.family(), StarConvention::plain)) {
  if (order < 1) throw UsageError("green order must be >= 1");
}

TensorElem GreenSystem::component_elem(int sign, int mode, int r) const {
  const Family f = rep_->family();
  const int n = rep_->modes();
  const int p = order_;
  if (r < 1 || r > p) throw UsageError("green index out of range");
  TensorElem out(f, p);

  if (sign > 0) {
    // Chains i <= k_1 <= ... <= k_{r-1} <= n of upper-triangular entries,
    // the raising letter at slot r, units afterwards.
    std::vector<int> chain;
    auto emit = [&]() {
      std::vector<FreeElem> slots;
      slots.reserve(static_cast<size_t>(p));
      int prev = mode;
      for (int k : chain) {
        slots.push_back(lplus_[static_cast<size_t>(prev - 1)][static_cast<size_t>(k - 1)]);
        prev = k;
      }
      slots.push_back(FreeElem::generator(f, Generator::make_raise(prev)));
      for (int t = r + 1; t <= p; ++t) slots.push_back(FreeElem::unit(f));
      out += TensorElem::elementary(slots);
    };
    auto rec = [&](auto&& self, int depth, int last) -> void {
      if (depth == r - 1) {
        emit();
        return;
      }
      for (int k = last; k <= n; ++k) {
        chain.push_back(k);
        self(self, depth + 1, k);
        chain.pop_back();
      }
    };
    rec(rec, 0, mode);
    return out;
  }

  // Lowering component: units up to slot r-1, the lowering letter, then a
  // descending chain n >= k_1 >= ... >= k_m >= j of lower-triangular
  // entries ending at column j (m = p - r).
  const int m = p - r;
  std::vector<int> chain;
  auto emit = [&]() {
    std::vector<FreeElem> slots;
    slots.reserve(static_cast<size_t>(p));
    for (int t = 1; t < r; ++t) slots.push_back(FreeElem::unit(f));
    const int osc = chain.empty() ? mode : chain.front();
    slots.push_back(FreeElem::generator(f, Generator::make_lower(osc)));
    for (size_t t = 0; t < chain.size(); ++t) {
      int row = chain[t];
      int col = (t + 1 < chain.size()) ? chain[t + 1] : mode;
      slots.push_back(lminus_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)]);
    }
    out += TensorElem::elementary(slots);
  };
  auto rec = [&](auto&& self, int depth, int last) -> void {
    if (depth == m) {
      emit();
      return;
    }
    for (int k = last; k >= mode; --k) {
      chain.push_back(k);
      self(self, depth + 1, k);
      chain.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

TensorElem GreenSystem::classical_component_elem(int sign, int mode, int r) const {
  const Family f = rep_->family();
  std::vector<FreeElem> slots;
  for (int t = 1; t <= order_; ++t) {
    if (t == r)
      slots.push_back(FreeElem::generator(
          f, sign > 0 ? Generator::make_raise(mode) : Generator::make_lower(mode)));
    else
      slots.push_back(FreeElem::unit(f));
  }
  return TensorElem::elementary(slots);
}

TensorElem GreenSystem::q_operator_elem(int sign, int j, int i, int r) const {
  const Family f = rep_->family();
  const int n = rep_->modes();
  const int p = order_;
  const int r1 = sign > 0 ? r : r - 1;
  const int r2 = p - r1;
  TensorElem out(f, p);
  for (int k = 1; k <= n; ++k) {
    const FreeElem& first = lplus_[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
    const FreeElem& second = lminus_[static_cast<size_t>(k - 1)][static_cast<size_t>(i - 1)];
    if (first.is_zero() || second.is_zero()) continue;
    if (r1 == 0) {
      ScalarQ c = hopf_.counit_ext(first);
      if (c.is_zero()) continue;
      out += hopf_.iterate_coproduct(second, r2).scaled(c);
    } else if (r2 == 0) {
      ScalarQ c = hopf_.counit_ext(second);
      if (c.is_zero()) continue;
      out += hopf_.iterate_coproduct(first, r1).scaled(c);
    } else {
      out += hopf_.iterate_coproduct(first, r1)
                 .concat(hopf_.iterate_coproduct(second, r2));
    }
  }
  return out;
}

std::vector<CheckResult> GreenSystem::check_sum(const Evaluator& ev,
                                                const OscillatorRep& eval_rep) const {
  std::vector<CheckResult> out;
  const Family f = rep_->family();
  TensorRep trep{&eval_rep, order_};
  for (int sign : {+1, -1}) {
    for (int i = 1; i <= rep_->modes(); ++i) {
      TensorElem diff(f, order_);
      for (int r = 1; r <= order_; ++r) diff += component_elem(sign, i, r);
      diff -= hopf_.iterate_coproduct(
          FreeElem::generator(f, sign > 0 ? Generator::make_raise(i)
                                          : Generator::make_lower(i)),
          order_);
      auto cols = margin_safe_columns(trep, diff);
      Verdict v = check_tensor_zero_on_columns(diff, trep, cols, ev);
      out.push_back({"green.sum", {sign, i}, v.pass, v.residual,
                     "component sum equals the iterated coproduct"});
    }
  }
  return out;
}

std::vector<CheckResult> GreenSystem::check_vacuum(const Evaluator& ev) const {
  std::vector<CheckResult> out;
  const Family f = rep_->family();
  TensorRep trep{rep_, order_};
  const ScalarQ target = ScalarQ::qint(order_);
  for (int i = 1; i <= rep_->modes(); ++i) {
    for (int j = 1; j <= rep_->modes(); ++j) {
      SparseMat lower = evaluate_tensor(
          hopf_.iterate_coproduct(FreeElem::generator(f, Generator::make_lower(i)), order_),
          trep);
      SparseMat raisem = evaluate_tensor(
          hopf_.iterate_coproduct(FreeElem::generator(f, Generator::make_raise(j)), order_),
          trep);
      auto v = raisem.column(0);
      std::map<std::int64_t, ScalarQ> w;
      for (const auto& [k, vk] : v) {
        for (const auto& [rrow, a] : lower.column(k)) {
          auto it = w.find(rrow);
          if (it == w.end())
            w.emplace(rrow, a * vk);
          else
            it->second += a * vk;
        }
      }
      if (i == j) {
        auto it = w.find(0);
        if (it == w.end())
          w.emplace(0, -target);
        else
          it->second -= target;
      }
      bool pass = true;
      std::string residual;
      for (const auto& [rrow, val] : w) {
        std::string why;
        if (!ev.entry_vanishes(val, &why)) {
          pass = false;
          residual = "vacuum image row " + std::to_string(rrow) + ": " + why;
          break;
        }
      }
      out.push_back({"green.vacuum", {i, j}, pass, residual,
                     "lowest-weight normalization of the order-p module"});
    }
  }
  return out;
}

std::vector<GreenSystem::AnomalousInstance> GreenSystem::anomalous_catalog() const {
  std::vector<AnomalousInstance> out;
  const Family f = rep_->family();
  const int n = rep_->modes();
  const int p = order_;
  const int u = f == Family::parafermi ? 1 : -1;
  const ScalarQ su(ScalarQ::spow(u));    // q^{u/2}
  const ScalarQ smu(ScalarQ::spow(-u));  // q^{-u/2}
  const ScalarQ corr = qq();

  auto A = [&](int i, int r) { return component_elem(+1, i, r); };
  auto B = [&](int i, int r) { return component_elem(-1, i, r); };
  TensorElem zero(f, p);

  for (int r = 1; r <= p; ++r) {
    for (int s = 1; s < r; ++s) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i < j) {
            TensorElem c = (A(j, r) * A(i, s)).scaled(ScalarQ(u) * corr);
            out.push_back({"pp.lt", {i, j, r, s},
                           A(i, r) * A(j, s) - (A(j, s) * A(i, r)).scaled(ScalarQ(u)) + c,
                           c});
            out.push_back({"mm.lt", {i, j, r, s},
                           B(i, r) * B(j, s) - (B(j, s) * B(i, r)).scaled(ScalarQ(u)),
                           zero});
          } else if (i > j) {
            TensorElem c = (B(j, r) * B(i, s)).scaled(ScalarQ(-u) * corr);
            out.push_back({"mm.gt", {i, j, r, s},
                           B(i, r) * B(j, s) - (B(j, s) * B(i, r)).scaled(ScalarQ(u)) + c,
                           c});
            out.push_back({"pp.gt", {i, j, r, s},
                           A(i, r) * A(j, s) - (A(j, s) * A(i, r)).scaled(ScalarQ(u)),
                           zero});
          }
          out.push_back({"mp.mixed", {i, j, r, s},
                         B(i, r) * A(j, s) - (A(j, s) * B(i, r)).scaled(ScalarQ(u)),
                         zero});
        }
        out.push_back({"pp.eqmode", {i, 0, r, s},
                       A(i, r) * A(i, s) -
                           (A(i, s) * A(i, r)).scaled(ScalarQ(u) * ScalarQ::spow(2)),
                       zero});
        out.push_back({"mm.eqmode", {i, 0, r, s},
                       B(i, r) * B(i, s) -
                           (B(i, s) * B(i, r)).scaled(ScalarQ(u) * ScalarQ::spow(-2)),
                       zero});
      }
    }
  }

  for (int r = 1; r <= p; ++r) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const int e = epsilon_sign(i, j);
        out.push_back({"pp.samegreen", {i, j, r, r},
                       A(i, r) * A(j, r) +
                           (A(j, r) * A(i, r)).scaled(ScalarQ(u) * ScalarQ::spow(-2 * u * e)),
                       zero});
        out.push_back({"mm.samegreen", {i, j, r, r},
                       B(i, r) * B(j, r) +
                           (B(j, r) * B(i, r)).scaled(ScalarQ(u) * ScalarQ::spow(-2 * u * e)),
                       zero});
        out.push_back({"mp.qminus", {i, j, r, r},
                       B(i, r) * A(j, r) +
                           (A(j, r) * B(i, r)).scaled(ScalarQ(u) * ScalarQ::spow(-2 * u)) -
                           q_operator_elem(-1, j, i, r).scaled(smu),
                       zero});
        out.push_back({"mp.qplus", {i, j, r, r},
                       B(i, r) * A(j, r) +
                           (A(j, r) * B(i, r)).scaled(ScalarQ(u) * ScalarQ::spow(2 * u)) -
                           q_operator_elem(+1, j, i, r).scaled(su),
                       zero});
      }
    }
  }
  return out;
}

std::vector<CheckResult> GreenSystem::check_anomalous(const Evaluator& ev,
                                                      const OscillatorRep& eval_rep,
                                                      bool with_corrections) const {
  std::vector<CheckResult> out;
  TensorRep trep{&eval_rep, order_};
  for (const auto& inst : anomalous_catalog()) {
    auto cols = margin_safe_columns(trep, inst.element);
    Verdict v = check_tensor_zero_on_columns(inst.element, trep, cols, ev);
    out.push_back({"green.anomalous." + inst.tag, inst.idx, v.pass, v.residual,
                   "deformed quadratic exchange relation"});
    if (with_corrections && !inst.correction.is_zero()) {
      auto ccols = margin_safe_columns(trep, inst.correction);
      Verdict cv =
          check_tensor_zero_on_columns(inst.correction, trep, ccols, ev);
      out.push_back({"green.anomalous.correction." + inst.tag, inst.idx, cv.pass,
                     cv.residual, "deformation correction dies in the limit"});
    }
  }
  return out;
}

std::vector<CheckResult> GreenSystem::check_qops(const Evaluator& ev) const {
  std::vector<CheckResult> out;
  const Family f = rep_->family();
  const int n = rep_->modes();
  const int p = order_;
  const int u = f == Family::parafermi ? 1 : -1;
  const ScalarQ corrq = qq();
  TensorRep trep{rep_, p};

  auto diag_power = [&](int i, int sign) {
    SparseMat m = rep_->number_power(i, sign);
    SparseMat acc = m;
    for (int t = 2; t <= p; ++t) acc = acc.kron(m);
    return acc;
  };

  for (int r = 1; r <= p; ++r) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        auto AB = [&](int s) {
          return component_elem(+1, j, s) * component_elem(-1, i, s);
        };
        // Lowering-type operator against its quadratic expansion.
        {
          TensorElem F = q_operator_elem(-1, j, i, r).scaled(ScalarQ::spow(-u));
          if (i > j) {
            for (int s = 1; s <= r - 1; ++s)
              F -= AB(s).scaled(corrq * ScalarQ::spow(2 * u * (s - r)));
          } else if (i < j) {
            for (int s = r; s <= p; ++s)
              F += AB(s).scaled(corrq * ScalarQ::spow(2 * u * (s - r)));
          } else {
            for (int s = 1; s <= r - 1; ++s)
              F -= AB(s).scaled(corrq * ScalarQ::spow(2 * u * (s - r)));
          }
          auto cols = margin_safe_columns(trep, F);
          SparseMat M = evaluate_tensor(F, trep);
          if (i == j)
            M -= diag_power(i, -1).scaled(ScalarQ::spow(-u * (2 * r - p - 1)));
          Verdict v = check_zero_on_columns(M, cols, ev);
          out.push_back({"green.qops.minus", {i, j, r}, v.pass, v.residual,
                         "coproduct slice equals the quadratic expansion"});
        }
        // Raising-type operator.
        {
          TensorElem F = q_operator_elem(+1, j, i, r).scaled(ScalarQ::spow(u));
          if (j > i) {
            for (int s = r + 1; s <= p; ++s)
              F += AB(s).scaled(corrq * ScalarQ::spow(2 * u * (s - r)));
          } else if (j < i) {
            for (int s = 1; s <= r; ++s)
              F -= AB(s).scaled(corrq * ScalarQ::spow(2 * u * (s - r)));
          } else {
            for (int s = r + 1; s <= p; ++s)
              F += AB(s).scaled(corrq * ScalarQ::spow(2 * u * (s - r)));
          }
          auto cols = margin_safe_columns(trep, F);
          SparseMat M = evaluate_tensor(F, trep);
          if (i == j)
            M -= diag_power(i, +1).scaled(ScalarQ::spow(-u * (2 * r - p - 1)));
          Verdict v = check_zero_on_columns(M, cols, ev);
          out.push_back({"green.qops.plus", {i, j, r}, v.pass, v.residual,
                         "coproduct slice equals the quadratic expansion"});
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> GreenSystem::check_closure() const {
  std::vector<CheckResult> out;
  auto catalog = anomalous_catalog();
  std::set<std::pair<std::string, std::vector<int>>> keys;
  for (const auto& inst : catalog) keys.insert({inst.tag, inst.idx});
  const int p = order_;
  auto rstar = [p](int r) { return p - r + 1; };

  for (const auto& inst : catalog) {
    const int i = inst.idx[0], j = inst.idx[1], r = inst.idx[2], s = inst.idx[3];
    std::pair<std::string, std::vector<int>> dual;
    if (inst.tag == "pp.lt")
      dual = {"mm.gt", {j, i, rstar(s), rstar(r)}};
    else if (inst.tag == "mm.gt")
      dual = {"pp.lt", {j, i, rstar(s), rstar(r)}};
    else if (inst.tag == "mm.lt")
      dual = {"pp.gt", {j, i, rstar(s), rstar(r)}};
    else if (inst.tag == "pp.gt")
      dual = {"mm.lt", {j, i, rstar(s), rstar(r)}};
    else if (inst.tag == "pp.eqmode")
      dual = {"mm.eqmode", {i, 0, rstar(s), rstar(r)}};
    else if (inst.tag == "mm.eqmode")
      dual = {"pp.eqmode", {i, 0, rstar(s), rstar(r)}};
    else if (inst.tag == "mp.mixed")
      dual = {"mp.mixed", {j, i, rstar(s), rstar(r)}};
    else if (inst.tag == "pp.samegreen")
      dual = {"mm.samegreen", {j, i, rstar(r), rstar(r)}};
    else if (inst.tag == "mm.samegreen")
      dual = {"pp.samegreen", {j, i, rstar(r), rstar(r)}};
    else if (inst.tag == "mp.qminus")
      dual = {"mp.qplus", {j, i, rstar(r), rstar(r)}};
    else if (inst.tag == "mp.qplus")
      dual = {"mp.qminus", {j, i, rstar(r), rstar(r)}};
    bool pass = keys.count(dual) > 0;
    out.push_back({"green.closure." + inst.tag, inst.idx, pass,
                   pass ? "" : "star-reflected instance missing from the catalog",
                   "catalog closed under the star reflection"});
  }
  return out;
}

std::vector<CheckResult> GreenSystem::check_classical() const {
  std::vector<CheckResult> out;
  const Family f = rep_->family();
  const int n = rep_->modes();
  const int p = order_;
  const int u = f == Family::parafermi ? 1 : -1;
  OscillatorRep crep = rep_->classicalized();
  TensorRep trep{&crep, p};
  const Evaluator ev = Evaluator::at(Rational(1));

  auto A = [&](int i, int r) { return classical_component_elem(+1, i, r); };
  auto B = [&](int i, int r) { return classical_component_elem(-1, i, r); };

  auto run = [&](const std::string& tag, std::vector<int> idx, const TensorElem& e) {
    auto cols = margin_safe_columns(trep, e);
    Verdict v = check_tensor_zero_on_columns(e, trep, cols, ev);
    out.push_back({"green.classical." + tag, std::move(idx), v.pass, v.residual,
                   "classical ansatz exchange relation"});
  };

  for (int r = 1; r <= p; ++r) {
    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= n; ++k) {
        TensorElem mp = B(i, r) * A(k, r) + (A(k, r) * B(i, r)).scaled(ScalarQ(u));
        if (i == k) mp -= TensorElem::unit(f, p);
        run("ga1.mp", {i, k, r}, mp);
        run("ga1.pp", {i, k, r},
            A(i, r) * A(k, r) + (A(k, r) * A(i, r)).scaled(ScalarQ(u)));
        run("ga1.mm", {i, k, r},
            B(i, r) * B(k, r) + (B(k, r) * B(i, r)).scaled(ScalarQ(u)));
      }
    }
  }
  for (int r = 1; r <= p; ++r) {
    for (int s = 1; s <= p; ++s) {
      if (r == s) continue;
      for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= n; ++k) {
          run("ga2.mm", {i, k, r, s},
              B(i, r) * B(k, s) - (B(k, s) * B(i, r)).scaled(ScalarQ(u)));
          run("ga2.pp", {i, k, r, s},
              A(i, r) * A(k, s) - (A(k, s) * A(i, r)).scaled(ScalarQ(u)));
          run("ga2.mp", {i, k, r, s},
              B(i, r) * A(k, s) - (A(k, s) * B(i, r)).scaled(ScalarQ(u)));
        }
      }
    }
  }

  HopfOps hopf(f, n);
  for (int sign : {+1, -1}) {
    for (int i = 1; i <= n; ++i) {
      TensorElem diff(f, p);
      for (int r = 1; r <= p; ++r) diff += classical_component_elem(sign, i, r);
      diff -= hopf.iterate_coproduct(
          FreeElem::generator(f, sign > 0 ? Generator::make_raise(i)
                                          : Generator::make_lower(i)),
          p);
      run("sum", {sign, i}, diff);
    }
  }
  return out;
}

}  // namespace paraq
