#include "hopf.hpp"

namespace paraq {

namespace {

FreeElem gen(Family f, Generator g) { return FreeElem::generator(f, g); }

}  // namespace

TensorElem HopfOps::coproduct(const Generator& g) const {
  const Family f = family_;
  const int i = g.mode;
  switch (g.kind) {
    case Generator::Kind::cartan: {
      FreeElem c = gen(f, g);
      return TensorElem::elementary({c, c});
    }
    case Generator::Kind::raise: {
      TensorElem t = TensorElem::elementary(
          {gen(f, Generator::make_raise(i)), FreeElem::unit(f)});
      t += TensorElem::elementary({gen(f, Generator::make_cartan(i, +1)),
                                   gen(f, Generator::make_raise(i))});
      for (int j = i + 1; j <= modes_; ++j) {
        FreeElem w = supercomm(gen(f, Generator::make_raise(i)),
                               gen(f, Generator::make_lower(j)))
                         .scaled(ScalarQ::omega());
        t += TensorElem::elementary({w, gen(f, Generator::make_raise(j))});
      }
      return t;
    }
    case Generator::Kind::lower: {
      TensorElem t = TensorElem::elementary(
          {gen(f, Generator::make_lower(i)), gen(f, Generator::make_cartan(i, -1))});
      t += TensorElem::elementary({FreeElem::unit(f), gen(f, Generator::make_lower(i))});
      for (int j = i + 1; j <= modes_; ++j) {
        FreeElem w = supercomm(gen(f, Generator::make_raise(j)),
                               gen(f, Generator::make_lower(i)))
                         .scaled(-ScalarQ::omega());
        t += TensorElem::elementary({gen(f, Generator::make_lower(j)), w});
      }
      return t;
    }
  }
  throw UsageError("bad generator");
}

ScalarQ HopfOps::counit(const Generator& g) const {
  return g.kind == Generator::Kind::cartan ? ScalarQ(1) : ScalarQ();
}

FreeElem HopfOps::antipode(const Generator& g) const {
  const Family f = family_;
  const int i = g.mode;
  switch (g.kind) {
    case Generator::Kind::cartan:
      return gen(f, Generator::make_cartan(i, -g.cexp));
    case Generator::Kind::raise: {
      // -q^{-h_i} a+_i  -  sum over strictly increasing chains
      // i < j_1 < ... < j_s <= n of (-omega)^s W_{i j_1} ... W_{j_{s-1} j_s}
      // q^{-h_{j_s}} a+_{j_s},  W_{a b} = q^{-h_a} [[a+_a, a-_b]].
      auto W = [&](int a, int b) {
        return gen(f, Generator::make_cartan(a, -1)) *
               supercomm(gen(f, Generator::make_raise(a)),
                         gen(f, Generator::make_lower(b)));
      };
      FreeElem out = -(gen(f, Generator::make_cartan(i, -1)) *
                       gen(f, Generator::make_raise(i)));
      std::vector<int> chain;
      auto rec = [&](auto&& self, int last) -> void {
        for (int j = last + 1; j <= modes_; ++j) {
          chain.push_back(j);
          FreeElem term = FreeElem::unit(f);
          int prev = i;
          for (int jk : chain) {
            term = term * W(prev, jk);
            prev = jk;
          }
          term = term * gen(f, Generator::make_cartan(prev, -1)) *
                 gen(f, Generator::make_raise(prev));
          ScalarQ coeff = ScalarQ(-1);  // the overall minus in front
          ScalarQ mw = -ScalarQ::omega();
          for (size_t t = 0; t < chain.size(); ++t) coeff *= mw;
          out += term.scaled(coeff);
          self(self, j);
          chain.pop_back();
        }
      };
      rec(rec, i);
      return out;
    }
    case Generator::Kind::lower: {
      // -a-_i q^{h_i}  -  sum over chains n >= j_s > ... > j_1 > i of
      // omega^s a-_{j_s} q^{h_{j_s}} V_{j_s j_{s-1}} ... V_{j_1 i},
      // V_{a b} = [[a+_a, a-_b]] q^{h_b}.
      auto V = [&](int a, int b) {
        return supercomm(gen(f, Generator::make_raise(a)),
                         gen(f, Generator::make_lower(b))) *
               gen(f, Generator::make_cartan(b, +1));
      };
      FreeElem out = -(gen(f, Generator::make_lower(i)) *
                       gen(f, Generator::make_cartan(i, +1)));
      std::vector<int> chain;  // ascending j_1 < ... < j_s, all > i
      auto rec = [&](auto&& self, int last) -> void {
        for (int j = last + 1; j <= modes_; ++j) {
          chain.push_back(j);
          const int js = chain.back();
          FreeElem term = gen(f, Generator::make_lower(js)) *
                          gen(f, Generator::make_cartan(js, +1));
          for (size_t t = chain.size(); t-- > 0;) {
            int a = chain[t];
            int b = t == 0 ? i : chain[t - 1];
            term = term * V(a, b);
          }
          ScalarQ coeff = ScalarQ(-1);
          for (size_t t = 0; t < chain.size(); ++t) coeff *= ScalarQ::omega();
          out += term.scaled(coeff);
          self(self, j);
          chain.pop_back();
        }
      };
      rec(rec, i);
      return out;
    }
  }
  throw UsageError("bad generator");
}

TensorElem HopfOps::coproduct_word(const Word& w) const {
  TensorElem t = TensorElem::unit(family_, 2);
  for (const auto& g : w) t = t * coproduct(g);
  return t;
}

TensorElem HopfOps::coproduct_ext(const FreeElem& e) const {
  TensorElem out(family_, 2);
  for (const auto& [w, c] : e.terms()) out += coproduct_word(w).scaled(c);
  return out;
}

ScalarQ HopfOps::counit_ext(const FreeElem& e) const {
  ScalarQ out;
  for (const auto& [w, c] : e.terms()) {
    bool all_cartan = true;
    for (const auto& g : w)
      if (g.kind != Generator::Kind::cartan) all_cartan = false;
    if (all_cartan) out += c;
  }
  return out;
}

FreeElem HopfOps::antipode_word(const Word& w) const {
  FreeElem out = FreeElem::unit(family_);
  int odd = 0;
  for (const auto& g : w) odd += g.parity(family_);
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = out * antipode(*it);
  // Reversing k odd letters through the graded anti-homomorphism rule
  // costs (-1)^{k(k-1)/2}.
  if (family_ == Family::parabose && ((odd * (odd - 1) / 2) % 2) != 0)
    out = -out;
  return out;
}

FreeElem HopfOps::antipode_ext(const FreeElem& e) const {
  FreeElem out(family_);
  for (const auto& [w, c] : e.terms()) out += antipode_word(w).scaled(c);
  return out;
}

TensorElem HopfOps::coproduct_at_slot(const TensorElem& t, int slot) const {
  if (slot < 1 || slot > t.arity()) throw UsageError("slot out of range");
  TensorElem out(family_, t.arity() + 1);
  for (const auto& [tuple, c] : t.terms()) {
    TensorElem d = coproduct_word(tuple[static_cast<size_t>(slot - 1)]);
    for (const auto& [pair, dc] : d.terms()) {
      std::vector<Word> nt;
      nt.reserve(tuple.size() + 1);
      for (int k = 0; k < slot - 1; ++k) nt.push_back(tuple[static_cast<size_t>(k)]);
      nt.push_back(pair[0]);
      nt.push_back(pair[1]);
      for (size_t k = static_cast<size_t>(slot); k < tuple.size(); ++k)
        nt.push_back(tuple[k]);
      out.add_term(nt, c * dc);
    }
  }
  return out;
}

TensorElem HopfOps::iterate_coproduct(const FreeElem& e, int p) const {
  if (p < 1) throw UsageError("iterated coproduct needs p >= 1");
  TensorElem t = TensorElem::from_free(e);
  for (int k = 2; k <= p; ++k) t = coproduct_at_slot(t, 1);
  return t;
}

std::vector<Generator> HopfOps::generator_list() const {
  std::vector<Generator> gs;
  for (int i = 1; i <= modes_; ++i) {
    gs.push_back(Generator::make_raise(i));
    gs.push_back(Generator::make_lower(i));
    gs.push_back(Generator::make_cartan(i, +1));
    gs.push_back(Generator::make_cartan(i, -1));
  }
  return gs;
}

namespace {

std::vector<int> gen_index(const Generator& g) {
  int kind = g.kind == Generator::Kind::raise
                 ? 1
                 : (g.kind == Generator::Kind::lower ? -1 : (g.cexp > 0 ? 2 : -2));
  return {kind, g.mode};
}

}  // namespace

std::vector<CheckResult> hopf_axiom_checks(const HopfOps& hopf,
                                           const OscillatorRep& rep,
                                           const Evaluator& ev) {
  std::vector<CheckResult> out;
  TensorRep t2{&rep, 2};
  TensorRep t3{&rep, 3};
  const Family f = rep.family();

  for (const auto& g : hopf.generator_list()) {
    FreeElem ge = FreeElem::generator(f, g);
    TensorElem d = hopf.coproduct(g);

    {
      TensorElem diff = hopf.coproduct_at_slot(d, 1) - hopf.coproduct_at_slot(d, 2);
      auto cols = margin_safe_columns(t3, diff);
      Verdict v = check_tensor_zero_on_columns(diff, t3, cols, ev);
      out.push_back({"hopf.coassoc", gen_index(g), v.pass, v.residual,
                     "coassociativity on a generator"});
    }

    {
      FreeElem left(f), right(f);
      for (const auto& [pair, c] : d.terms()) {
        ScalarQ eps_first = hopf.counit_ext(FreeElem::from_word(f, pair[0]));
        ScalarQ eps_second = hopf.counit_ext(FreeElem::from_word(f, pair[1]));
        left += FreeElem::from_word(f, pair[1], c * eps_first);
        right += FreeElem::from_word(f, pair[0], c * eps_second);
      }
      FreeElem dl = left - ge, dr = right - ge;
      auto colsl = margin_safe_columns(rep, dl);
      Verdict vl = dl.is_zero()
                       ? Verdict{}
                       : check_zero_on_columns(evaluate(dl, rep), colsl, ev);
      out.push_back({"hopf.counit", [&] {
                       auto ix = gen_index(g);
                       ix.push_back(1);
                       return ix;
                     }(),
                     vl.pass, vl.residual, "left counit law"});
      auto colsr = margin_safe_columns(rep, dr);
      Verdict vr = dr.is_zero()
                       ? Verdict{}
                       : check_zero_on_columns(evaluate(dr, rep), colsr, ev);
      out.push_back({"hopf.counit", [&] {
                       auto ix = gen_index(g);
                       ix.push_back(2);
                       return ix;
                     }(),
                     vr.pass, vr.residual, "right counit law"});
    }

    {
      FreeElem sl(f), sr(f);
      for (const auto& [pair, c] : d.terms()) {
        FreeElem u = FreeElem::from_word(f, pair[0]);
        FreeElem v = FreeElem::from_word(f, pair[1]);
        sl += (hopf.antipode_ext(u) * v).scaled(c);
        sr += (u * hopf.antipode_ext(v)).scaled(c);
      }
      FreeElem target = FreeElem::unit(f).scaled(hopf.counit(g));
      FreeElem dl = sl - target, dr = sr - target;
      auto colsl = margin_safe_columns(rep, dl);
      Verdict vl = dl.is_zero()
                       ? Verdict{}
                       : check_zero_on_columns(evaluate(dl, rep), colsl, ev);
      out.push_back({"hopf.antipode", [&] {
                       auto ix = gen_index(g);
                       ix.push_back(1);
                       return ix;
                     }(),
                     vl.pass, vl.residual, "antipode law m(S x id)Delta = eta eps"});
      auto colsr = margin_safe_columns(rep, dr);
      Verdict vr = dr.is_zero()
                       ? Verdict{}
                       : check_zero_on_columns(evaluate(dr, rep), colsr, ev);
      out.push_back({"hopf.antipode", [&] {
                       auto ix = gen_index(g);
                       ix.push_back(2);
                       return ix;
                     }(),
                     vr.pass, vr.residual, "antipode law m(id x S)Delta = eta eps"});
    }
  }
  return out;
}

std::vector<CheckResult> hopf_ideal_checks(const HopfOps& hopf,
                                           const std::vector<RelationInstance>& rels,
                                           const OscillatorRep& rep,
                                           const Evaluator& ev) {
  std::vector<CheckResult> out;
  TensorRep t2{&rep, 2};
  for (const auto& r : rels) {
    {
      TensorElem d = hopf.coproduct_ext(r.element);
      auto cols = margin_safe_columns(t2, d);
      Verdict v = check_tensor_zero_on_columns(d, t2, cols, ev);
      out.push_back({"hopf.ideal.delta." + r.name, r.indices, v.pass, v.residual,
                     "coproduct stays inside the defining ideal"});
    }
    {
      ScalarQ e = hopf.counit_ext(r.element);
      std::string why;
      bool pass = ev.entry_vanishes(e, &why);
      out.push_back({"hopf.ideal.counit." + r.name, r.indices, pass,
                     pass ? "" : why, "counit kills the defining ideal"});
    }
    {
      FreeElem s = hopf.antipode_ext(r.element);
      auto cols = margin_safe_columns(rep, s);
      Verdict v = s.is_zero() ? Verdict{}
                              : check_zero_on_columns(evaluate(s, rep), cols, ev);
      out.push_back({"hopf.ideal.antipode." + r.name, r.indices, v.pass, v.residual,
                     "antipode preserves the defining ideal"});
    }
  }
  return out;
}

std::vector<CheckResult> lmatrix_coproduct_checks(const HopfOps& hopf,
                                                  const OscillatorRep& rep,
                                                  const Evaluator& ev) {
  std::vector<CheckResult> out;
  const int n = hopf.modes();
  const Family f = rep.family();
  TensorRep t2{&rep, 2};
  auto L = lmatrix_plus(n, f);
  for (int i = 1; i <= n + 1; ++i) {
    for (int k = 1; k <= n + 1; ++k) {
      TensorElem lhs = hopf.coproduct_ext(L[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)]);
      TensorElem rhs(f, 2);
      for (int j = i; j <= k; ++j)
        rhs += TensorElem::elementary(
            {L[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
             L[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)]});
      TensorElem diff = lhs - rhs;
      auto cols = margin_safe_columns(t2, diff);
      Verdict v = check_tensor_zero_on_columns(diff, t2, cols, ev);
      out.push_back({"hopf.Lmatrix", {i, k}, v.pass, v.residual,
                     "entrywise coproduct equals the matrix square"});
    }
  }
  return out;
}

}  // namespace paraq
