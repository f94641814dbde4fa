#include "fock.hpp"

#include <algorithm>
#include <sstream>

namespace paraq {

SparseMat SparseMat::identity(std::int64_t dim) {
  SparseMat m(dim);
  for (std::int64_t i = 0; i < dim; ++i) m.cols_[i][i] = ScalarQ(1);
  return m;
}

void SparseMat::add(std::int64_t r, std::int64_t c, const ScalarQ& v) {
  if (v.is_zero()) return;
  auto& col = cols_[c];
  auto it = col.find(r);
  if (it == col.end()) {
    col.emplace(r, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) {
    col.erase(it);
    if (col.empty()) cols_.erase(c);
  }
}

ScalarQ SparseMat::at(std::int64_t r, std::int64_t c) const {
  auto ct = cols_.find(c);
  if (ct == cols_.end()) return ScalarQ();
  auto it = ct->second.find(r);
  return it == ct->second.end() ? ScalarQ() : it->second;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  SparseMat out(dim_);
  for (const auto& [c, colB] : o.cols_) {
    std::map<std::int64_t, ScalarQ> acc;
    for (const auto& [k, vb] : colB) {
      auto at = cols_.find(k);
      if (at == cols_.end()) continue;
      for (const auto& [r, va] : at->second) {
        auto it = acc.find(r);
        if (it == acc.end())
          acc.emplace(r, va * vb);
        else
          it->second += va * vb;
      }
    }
    for (auto& [r, v] : acc)
      if (!v.is_zero()) out.cols_[c].emplace(r, std::move(v));
    if (out.cols_.count(c) && out.cols_[c].empty()) out.cols_.erase(c);
  }
  return out;
}

SparseMat& SparseMat::operator+=(const SparseMat& o) {
  for (const auto& [c, col] : o.cols_)
    for (const auto& [r, v] : col) add(r, c, v);
  return *this;
}

SparseMat& SparseMat::operator-=(const SparseMat& o) {
  for (const auto& [c, col] : o.cols_)
    for (const auto& [r, v] : col) add(r, c, -v);
  return *this;
}

SparseMat SparseMat::scaled(const ScalarQ& c) const {
  SparseMat out(dim_);
  if (c.is_zero()) return out;
  for (const auto& [cc, col] : cols_)
    for (const auto& [r, v] : col) out.cols_[cc].emplace(r, v * c);
  return out;
}

SparseMat SparseMat::kron(const SparseMat& o) const {
  SparseMat out(dim_ * o.dim_);
  for (const auto& [ca, colA] : cols_)
    for (const auto& [ra, va] : colA)
      for (const auto& [cb, colB] : o.cols_)
        for (const auto& [rb, vb] : colB)
          out.cols_[ca * o.dim_ + cb].emplace(ra * o.dim_ + rb, va * vb);
  return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return dim_ == o.dim_ && cols_ == o.cols_;
}

std::map<std::int64_t, ScalarQ> SparseMat::column(std::int64_t c) const {
  auto it = cols_.find(c);
  return it == cols_.end() ? std::map<std::int64_t, ScalarQ>{} : it->second;
}

std::int64_t SparseMat::entry_count() const {
  std::int64_t n = 0;
  for (const auto& [c, col] : cols_) n += static_cast<std::int64_t>(col.size());
  return n;
}

OccBasis::OccBasis(int m, int d) : modes(m), cutoff(d) {
  dim = 1;
  for (int i = 0; i < m; ++i) dim *= (d + 1);
}

std::int64_t OccBasis::index(const std::vector<int>& o) const {
  std::int64_t idx = 0;
  for (int i = 0; i < modes; ++i) idx = idx * (cutoff + 1) + o[static_cast<size_t>(i)];
  return idx;
}

std::vector<int> OccBasis::occ(std::int64_t idx) const {
  std::vector<int> o(static_cast<size_t>(modes));
  for (int i = modes - 1; i >= 0; --i) {
    o[static_cast<size_t>(i)] = static_cast<int>(idx % (cutoff + 1));
    idx /= (cutoff + 1);
  }
  return o;
}

namespace {

// Bose lowering amplitude [m]_q = (q^m - q^-m)/(q - q^-1); solves the two
// mixed single-mode relations f(m+1) - q^{+-1} f(m) = q^{-+m}.
ScalarQ bose_amp(int m) {
  if (m == 0) return ScalarQ();
  return (ScalarQ::spow(2 * m) - ScalarQ::spow(-2 * m)) /
         (ScalarQ::spow(2) - ScalarQ::spow(-2));
}

int eps_sign_local(int i, int j) { return i < j ? 1 : (i > j ? -1 : 0); }

struct Ansatz {
  int phase_sign;  // a+_i carries s^{phase_sign * sum eps_ik n_k}
  bool jordan_wigner;
};

}  // namespace

OscillatorRep OscillatorRep::build(Family f, int modes, int cutoff) {
  const int d = (f == Family::parafermi) ? 1 : cutoff;
  if (modes < 1 || d < 1) throw UsageError("build: modes >= 1, cutoff >= 1");

  // Candidate diagonal-phase solutions of the two-mode constraints; the
  // first one that passes the full exchange-relation suite wins, and a
  // failure of all candidates is a construction error.
  const std::vector<Ansatz> candidates =
      f == Family::parafermi
          ? std::vector<Ansatz>{{-1, true}, {1, true}, {-1, false}, {1, false}}
          : std::vector<Ansatz>{{1, false}, {-1, false}, {1, true}, {-1, true}};

  std::string diagnostics;
  for (const auto& an : candidates) {
    OscillatorRep rep;
    rep.family_ = f;
    rep.basis_ = OccBasis(modes, d);
    const auto& B = rep.basis_;
    rep.raise_.assign(static_cast<size_t>(modes), SparseMat(B.dim));
    rep.lower_.assign(static_cast<size_t>(modes), SparseMat(B.dim));
    rep.cartan_p_.assign(static_cast<size_t>(modes), SparseMat(B.dim));
    rep.cartan_m_.assign(static_cast<size_t>(modes), SparseMat(B.dim));
    rep.num_p_.assign(static_cast<size_t>(modes), SparseMat(B.dim));
    rep.num_m_.assign(static_cast<size_t>(modes), SparseMat(B.dim));
    rep.parity_ = SparseMat(B.dim);

    // pi(q^{h_i}) = q^{N_i -+ 1/2}: upper sign parafermi, lower parabose.
    const int hshift = (f == Family::parafermi) ? -1 : +1;

    for (std::int64_t idx = 0; idx < B.dim; ++idx) {
      auto occ = B.occ(idx);
      int total = 0;
      for (int v : occ) total += v;
      rep.parity_.add(idx, idx,
                      (f == Family::parabose && total % 2) ? ScalarQ(-1) : ScalarQ(1));
      for (int i = 1; i <= modes; ++i) {
        const int ni = occ[static_cast<size_t>(i - 1)];
        rep.cartan_p_[static_cast<size_t>(i - 1)].add(idx, idx, ScalarQ::spow(2 * ni + hshift));
        rep.cartan_m_[static_cast<size_t>(i - 1)].add(idx, idx, ScalarQ::spow(-(2 * ni + hshift)));
        rep.num_p_[static_cast<size_t>(i - 1)].add(idx, idx, ScalarQ::spow(2 * ni));
        rep.num_m_[static_cast<size_t>(i - 1)].add(idx, idx, ScalarQ::spow(-2 * ni));

        int cross = 0;  // sum_{k != i} eps_ik n_k
        int string = 0; // sum_{k < i} n_k
        for (int k = 1; k <= modes; ++k) {
          if (k == i) continue;
          cross += eps_sign_local(i, k) * occ[static_cast<size_t>(k - 1)];
          if (k < i) string += occ[static_cast<size_t>(k - 1)];
        }
        const ScalarQ sgn = (an.jordan_wigner && string % 2) ? ScalarQ(-1) : ScalarQ(1);
        if (ni < d) {
          auto up = occ;
          up[static_cast<size_t>(i - 1)]++;
          rep.raise_[static_cast<size_t>(i - 1)].add(B.index(up), idx,
                                                     sgn * ScalarQ::spow(an.phase_sign * cross));
        }
        if (ni > 0) {
          auto dn = occ;
          dn[static_cast<size_t>(i - 1)]--;
          ScalarQ amp = (f == Family::parafermi) ? ScalarQ(1) : bose_amp(ni);
          rep.lower_[static_cast<size_t>(i - 1)].add(B.index(dn), idx,
                                                     sgn * ScalarQ::spow(-an.phase_sign * cross) * amp);
        }
      }
    }

    auto results = verify_oscillator_relations(rep);
    bool ok = true;
    for (const auto& r : results) {
      if (!r.pass) {
        ok = false;
        if (diagnostics.size() < 2000) {
          diagnostics += r.name;
          for (int ix : r.indices) diagnostics += "," + std::to_string(ix);
          diagnostics += ": " + r.residual + "\n";
        }
      }
    }
    if (ok) return rep;
  }
  throw ConstructionError("no oscillator ansatz satisfies the exchange relations:\n" +
                          diagnostics);
}

const SparseMat& OscillatorRep::gen_matrix(const Generator& g) const {
  const size_t i = static_cast<size_t>(g.mode - 1);
  if (g.mode < 1 || g.mode > modes()) throw UsageError("generator mode out of range");
  switch (g.kind) {
    case Generator::Kind::raise:
      return raise_[i];
    case Generator::Kind::lower:
      return lower_[i];
    case Generator::Kind::cartan:
      return g.cexp > 0 ? cartan_p_[i] : cartan_m_[i];
  }
  throw UsageError("bad generator");
}

const SparseMat& OscillatorRep::number_power(int mode, int sign) const {
  const size_t i = static_cast<size_t>(mode - 1);
  return sign > 0 ? num_p_[i] : num_m_[i];
}

namespace {

SparseMat map_entries(const SparseMat& m, const Rational& s0) {
  SparseMat out(m.dim());
  for (const auto& [c, col] : m.cols())
    for (const auto& [r, v] : col) out.add(r, c, ScalarQ(v.eval_at(s0)));
  return out;
}

}  // namespace

OscillatorRep OscillatorRep::classicalized() const {
  OscillatorRep rep = *this;
  const Rational one(1);
  for (int i = 0; i < modes(); ++i) {
    rep.raise_[static_cast<size_t>(i)] = map_entries(raise_[static_cast<size_t>(i)], one);
    rep.lower_[static_cast<size_t>(i)] = map_entries(lower_[static_cast<size_t>(i)], one);
    rep.num_p_[static_cast<size_t>(i)] = map_entries(num_p_[static_cast<size_t>(i)], one);
    rep.num_m_[static_cast<size_t>(i)] = map_entries(num_m_[static_cast<size_t>(i)], one);
  }
  return rep;
}

OscillatorRep OscillatorRep::specialized(const Rational& s0) const {
  OscillatorRep rep = *this;
  for (int i = 0; i < modes(); ++i) {
    rep.raise_[static_cast<size_t>(i)] = map_entries(raise_[static_cast<size_t>(i)], s0);
    rep.lower_[static_cast<size_t>(i)] = map_entries(lower_[static_cast<size_t>(i)], s0);
    rep.cartan_p_[static_cast<size_t>(i)] = map_entries(cartan_p_[static_cast<size_t>(i)], s0);
    rep.cartan_m_[static_cast<size_t>(i)] = map_entries(cartan_m_[static_cast<size_t>(i)], s0);
    rep.num_p_[static_cast<size_t>(i)] = map_entries(num_p_[static_cast<size_t>(i)], s0);
    rep.num_m_[static_cast<size_t>(i)] = map_entries(num_m_[static_cast<size_t>(i)], s0);
  }
  return rep;
}

std::int64_t TensorRep::dim() const {
  std::int64_t d = 1;
  for (int k = 0; k < arity; ++k) d *= base->dim();
  return d;
}

SparseMat evaluate_word(const Word& w, const OscillatorRep& rep) {
  SparseMat m = SparseMat::identity(rep.dim());
  // Word g1 g2 ... gm acts with gm applied first.
  for (const auto& g : w) m = m * rep.gen_matrix(g);
  return m;
}

SparseMat evaluate(const FreeElem& e, const OscillatorRep& rep) {
  SparseMat acc(rep.dim());
  for (const auto& [w, c] : e.terms()) acc += evaluate_word(w, rep).scaled(c);
  return acc;
}

SparseMat evaluate_tensor(const TensorElem& e, const TensorRep& trep) {
  const OscillatorRep& rep = *trep.base;
  SparseMat acc(trep.dim());
  const bool graded = rep.family() == Family::parabose;
  for (const auto& [tuple, c] : e.terms()) {
    SparseMat prod;
    int suffix_parity = 0;
    std::vector<SparseMat> factors;
    factors.reserve(tuple.size());
    // e_k = sum_{l>k} deg(u_l); build right to left.
    std::vector<int> epar(tuple.size(), 0);
    for (size_t k = tuple.size(); k-- > 0;) {
      epar[k] = suffix_parity;
      if (graded) suffix_parity ^= word_parity(tuple[k], rep.family());
    }
    for (size_t k = 0; k < tuple.size(); ++k) {
      SparseMat m = evaluate_word(tuple[k], rep);
      if (graded && epar[k] % 2) m = m * rep.parity_op();
      factors.push_back(std::move(m));
    }
    prod = factors.front();
    for (size_t k = 1; k < factors.size(); ++k) prod = prod.kron(factors[k]);
    acc += prod.scaled(c);
  }
  return acc;
}

std::vector<std::int64_t> margin_safe_columns(const OscillatorRep& rep,
                                              const std::vector<int>& bound) {
  std::vector<std::int64_t> out;
  if (rep.family() == Family::parafermi) {
    out.resize(static_cast<size_t>(rep.dim()));
    for (std::int64_t i = 0; i < rep.dim(); ++i) out[static_cast<size_t>(i)] = i;
    return out;
  }
  for (std::int64_t idx = 0; idx < rep.dim(); ++idx) {
    auto occ = rep.basis().occ(idx);
    bool ok = true;
    for (int i = 0; i < rep.modes() && ok; ++i)
      ok = occ[static_cast<size_t>(i)] + bound[static_cast<size_t>(i)] <= rep.cutoff();
    if (ok) out.push_back(idx);
  }
  return out;
}

std::vector<std::int64_t> margin_safe_columns(
    const TensorRep& trep, const std::vector<std::vector<int>>& bounds) {
  const OscillatorRep& rep = *trep.base;
  if (rep.family() == Family::parafermi) {
    std::vector<std::int64_t> out(static_cast<size_t>(trep.dim()));
    for (std::int64_t i = 0; i < trep.dim(); ++i) out[static_cast<size_t>(i)] = i;
    return out;
  }
  // Safe per tensor factor; combine slot-wise index lists.
  std::vector<std::vector<std::int64_t>> per_slot;
  for (int k = 0; k < trep.arity; ++k)
    per_slot.push_back(margin_safe_columns(rep, bounds[static_cast<size_t>(k)]));
  std::vector<std::int64_t> out;
  std::vector<size_t> pick(static_cast<size_t>(trep.arity), 0);
  while (true) {
    std::int64_t idx = 0;
    for (int k = 0; k < trep.arity; ++k)
      idx = idx * rep.dim() + per_slot[static_cast<size_t>(k)][pick[static_cast<size_t>(k)]];
    out.push_back(idx);
    int k = trep.arity - 1;
    while (k >= 0) {
      if (++pick[static_cast<size_t>(k)] < per_slot[static_cast<size_t>(k)].size()) break;
      pick[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> margin_safe_columns(const OscillatorRep& rep,
                                              const FreeElem& e) {
  return margin_safe_columns(rep, e.max_raise_degrees(rep.modes()));
}

std::vector<std::int64_t> margin_safe_columns(const TensorRep& trep,
                                              const TensorElem& e) {
  return margin_safe_columns(trep, e.max_raise_degrees(trep.base->modes()));
}

bool Evaluator::entry_vanishes(const ScalarQ& v, std::string* why) const {
  if (symbolic) {
    if (v.is_zero()) return true;
    if (why) *why = v.str();
    return false;
  }
  try {
    Rational r = v.eval_at(point);
    if (r == 0) return true;
    if (why) {
      std::ostringstream os;
      os << r << " (value of " << v.str() << ")";
      *why = os.str();
    }
    return false;
  } catch (const EvalError&) {
    if (why) *why = "pole of " + v.str() + " at the substitution point";
    return false;
  }
}

Verdict check_zero_on_columns(const SparseMat& m,
                              const std::vector<std::int64_t>& cols,
                              const Evaluator& ev) {
  for (std::int64_t c : cols) {
    auto col = m.column(c);
    for (const auto& [r, v] : col) {
      std::string why;
      if (!ev.entry_vanishes(v, &why)) {
        std::ostringstream os;
        os << "entry (" << r << "," << c << ") = " << why;
        return {false, os.str()};
      }
    }
  }
  return {true, ""};
}

Verdict check_tensor_zero_on_columns(const TensorElem& e, const TensorRep& trep,
                                     const std::vector<std::int64_t>& cols,
                                     const Evaluator& ev) {
  if (e.is_zero() || cols.empty()) return {};
  const OscillatorRep& rep = *trep.base;
  const int p = trep.arity;
  const std::int64_t D = rep.dim();
  const bool graded = rep.family() == Family::parabose;

  // Flat per-slot column storage for every tuple.
  struct Factors {
    ScalarQ coeff;
    std::vector<std::vector<std::vector<std::pair<std::int64_t, ScalarQ>>>> cols;
  };
  std::vector<Factors> tuples;
  tuples.reserve(e.terms().size());
  for (const auto& [tuple, c] : e.terms()) {
    Factors fs;
    fs.coeff = c;
    std::vector<int> epar(tuple.size(), 0);
    int suffix = 0;
    for (size_t k = tuple.size(); k-- > 0;) {
      epar[k] = suffix;
      if (graded) suffix ^= word_parity(tuple[k], rep.family());
    }
    for (size_t k = 0; k < tuple.size(); ++k) {
      SparseMat m = evaluate_word(tuple[k], rep);
      if (graded && epar[k] % 2) m = m * rep.parity_op();
      std::vector<std::vector<std::pair<std::int64_t, ScalarQ>>> flat(
          static_cast<size_t>(D));
      for (const auto& [cc, col] : m.cols())
        for (const auto& [r, v] : col)
          flat[static_cast<size_t>(cc)].push_back({r, v});
      fs.cols.push_back(std::move(flat));
    }
    tuples.push_back(std::move(fs));
  }

  std::vector<std::int64_t> slot_col(static_cast<size_t>(p));
  for (std::int64_t c : cols) {
    std::int64_t rest = c;
    for (int k = p - 1; k >= 0; --k) {
      slot_col[static_cast<size_t>(k)] = rest % D;
      rest /= D;
    }
    std::map<std::int64_t, ScalarQ> acc;
    std::vector<std::pair<std::int64_t, ScalarQ>> cur, next;
    for (const auto& fs : tuples) {
      cur.assign(1, {0, fs.coeff});
      bool dead = false;
      for (int k = 0; k < p; ++k) {
        const auto& colk =
            fs.cols[static_cast<size_t>(k)][static_cast<size_t>(slot_col[static_cast<size_t>(k)])];
        if (colk.empty()) {
          dead = true;
          break;
        }
        next.clear();
        next.reserve(cur.size() * colk.size());
        for (const auto& [row, val] : cur)
          for (const auto& [rk, vk] : colk)
            next.push_back({row * D + rk, val * vk});
        cur.swap(next);
      }
      if (dead) continue;
      for (auto& [row, val] : cur) {
        auto it = acc.find(row);
        if (it == acc.end())
          acc.emplace(row, std::move(val));
        else
          it->second += val;
      }
    }
    for (const auto& [row, val] : acc) {
      std::string why;
      if (!ev.entry_vanishes(val, &why)) {
        std::ostringstream os;
        os << "entry (" << row << "," << c << ") = " << why;
        return {false, os.str()};
      }
    }
  }
  return {};
}

namespace {

void push(std::vector<CheckResult>& out, const std::string& name,
          std::vector<int> idx, const SparseMat& residual,
          const std::vector<std::int64_t>& cols, const Evaluator& ev,
          const std::string& ref) {
  Verdict v = check_zero_on_columns(residual, cols, ev);
  out.push_back({name, std::move(idx), v.pass, v.residual, ref});
}

}  // namespace

std::vector<CheckResult> verify_oscillator_relations(const OscillatorRep& rep,
                                                     const Evaluator& ev) {
  std::vector<CheckResult> out;
  const int n = rep.modes();
  const bool fermi = rep.family() == Family::parafermi;
  // x y +- lam y x with upper sign = fermi throughout.
  auto sgn = [&](const ScalarQ& v) { return fermi ? v : -v; };

  std::vector<int> two(static_cast<size_t>(n), 2), onev(static_cast<size_t>(n), 1);
  auto cols2 = margin_safe_columns(rep, two);
  auto cols1 = margin_safe_columns(rep, onev);
  const std::string ref = "deformed oscillator exchange relations";

  for (int i = 1; i <= n; ++i) {
    const auto& ap = rep.gen_matrix(Generator::make_raise(i));
    const auto& am = rep.gen_matrix(Generator::make_lower(i));
    // a-_i a+_i +- q a+_i a-_i = q^{+-N_i}
    SparseMat r1 = am * ap;
    r1 += (ap * am).scaled(sgn(ScalarQ::spow(2)));
    r1 -= rep.number_power(i, fermi ? +1 : -1);
    push(out, "bq.mixed.q", {i}, r1, cols1, ev, ref);
    // a-_i a+_i +- q^-1 a+_i a-_i = q^{-+N_i}
    SparseMat r2 = am * ap;
    r2 += (ap * am).scaled(sgn(ScalarQ::spow(-2)));
    r2 -= rep.number_power(i, fermi ? -1 : +1);
    push(out, "bq.mixed.qinv", {i}, r2, cols1, ev, ref);
    // fermi nilpotency is the i = j case of the quadratic relation below
    if (fermi) {
      SparseMat r3 = (ap * ap).scaled(ScalarQ(2));
      push(out, "bq.nilpotent", {i}, r3, cols2, ev, ref);
    }
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const auto& api = rep.gen_matrix(Generator::make_raise(i));
      const auto& apj = rep.gen_matrix(Generator::make_raise(j));
      const auto& ami = rep.gen_matrix(Generator::make_lower(i));
      const auto& amj = rep.gen_matrix(Generator::make_lower(j));
      const int eij = i < j ? 1 : -1;
      const int sexp = fermi ? -2 * eij : 2 * eij;  // q^{-+ eps_ij}
      SparseMat rpp = api * apj;
      rpp += (apj * api).scaled(sgn(ScalarQ::spow(sexp)));
      push(out, "bq.pp", {i, j}, rpp, cols2, ev, ref);
      SparseMat rmm = ami * amj;
      rmm += (amj * ami).scaled(sgn(ScalarQ::spow(sexp)));
      push(out, "bq.mm", {i, j}, rmm, cols1, ev, ref);
      const int eji = -eij;
      const int sexp2 = fermi ? -2 * eji : 2 * eji;  // q^{-+ eps_ji}
      SparseMat rpm = api * amj;
      rpm += (amj * api).scaled(sgn(ScalarQ::spow(sexp2)));
      push(out, "bq.pm", {i, j}, rpm, cols1, ev, ref);
      SparseMat rmp = ami * apj;
      rmp += (apj * ami).scaled(sgn(ScalarQ::spow(sexp2)));
      push(out, "bq.mp", {i, j}, rmp, cols1, ev, ref);
    }
  }

  // Vacuum normalization pi(a-_i) pi(a+_j)|0> = delta_ij |0>.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      SparseMat m = rep.gen_matrix(Generator::make_lower(i)) *
                    rep.gen_matrix(Generator::make_raise(j));
      auto col = m.column(0);
      if (i == j) {
        auto it = col.find(0);
        if (it == col.end())
          col.emplace(0, ScalarQ(-1));
        else
          it->second -= ScalarQ(1);
      }
      bool pass = true;
      std::string residual;
      for (const auto& [r, v] : col) {
        std::string why;
        if (!ev.entry_vanishes(v, &why)) {
          pass = false;
          residual = "vacuum image row " + std::to_string(r) + ": " + why;
          break;
        }
      }
      out.push_back({"bq.vacuum", {i, j}, pass, residual, "lowest weight normalization"});
    }
  }

  // Cartan consistency: q^{h_i} q^{-h_i} = 1 and conjugation twists.
  auto colsall = margin_safe_columns(rep, std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 1; i <= n; ++i) {
    const auto& hp = rep.gen_matrix(Generator::make_cartan(i, +1));
    const auto& hm = rep.gen_matrix(Generator::make_cartan(i, -1));
    SparseMat r = hp * hm - SparseMat::identity(rep.dim());
    push(out, "bq.cartan.inverse", {i}, r, colsall, ev, "cartan letters invert");
    for (int j = 1; j <= n; ++j) {
      const auto& ap = rep.gen_matrix(Generator::make_raise(j));
      SparseMat c1 = hp * ap * hm - ap.scaled(ScalarQ::spow(i == j ? 2 : 0));
      push(out, "bq.cartan.conj", {i, j}, c1, cols1, ev, "cartan conjugation twist");
    }
  }
  return out;
}

}  // namespace paraq
