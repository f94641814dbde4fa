#include "modl.hpp"

#include <algorithm>
#include <deque>

namespace paraq {

std::string LabeledState::label() const {
  return (tilde ? "Lt[" : "L[") + std::to_string(x) + "," + std::to_string(y) +
         ";" + std::to_string(z) + "]";
}

std::vector<int> LabeledState::idx() const { return {tilde ? 1 : 0, x, y, z}; }

namespace {

FreeElem ag(Family f, int i) {
  return FreeElem::generator(f, Generator::make_raise(i));
}

ScalarQ qpow(int k) { return ScalarQ::spow(2 * k); }  // q^k

}  // namespace

FreeElem lambda_state(int n, Family f, bool tilde, int x, int y, int z) {
  auto in_range = [n](int v) { return v >= 1 && v <= n; };
  if (!in_range(x) || !in_range(y) || !in_range(z))
    throw UsageError("state index out of range");
  if (!tilde) {
    if (x < y && y == z)
      return graded_qcomm(supercomm(ag(f, x), ag(f, y)), ag(f, y), qpow(1));
    if (x < z && z < y)
      return graded_qcomm(supercomm(ag(f, x), ag(f, y)), ag(f, z), qpow(2)) +
             supercomm(supercomm(ag(f, x), ag(f, z)), ag(f, y)).scaled(qpow(1));
    throw UsageError("invalid plain state indices");
  }
  if (x == y && y < z)
    return graded_qcomm(ag(f, x), supercomm(ag(f, x), ag(f, z)), qpow(1));
  if (x < y && y < z)
    return graded_qcomm(ag(f, y), supercomm(ag(f, x), ag(f, z)), qpow(2)) +
           supercomm(ag(f, x), supercomm(ag(f, y), ag(f, z))).scaled(qpow(1));
  throw UsageError("invalid tilde state indices");
}

std::vector<LabeledState> lambda_states(int n, Family f) {
  if (n < 2) throw UsageError("need at least two modes");
  std::vector<LabeledState> out;
  for (int x = 1; x <= n; ++x)
    for (int z = x + 1; z <= n; ++z)
      for (int y = z; y <= n; ++y)
        out.push_back({false, x, y, z, lambda_state(n, f, false, x, y, z)});
  for (int x = 1; x <= n; ++x)
    for (int y = x; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z)
        out.push_back({true, x, y, z, lambda_state(n, f, true, x, y, z)});
  return out;
}

FreeElem ad_action(int i, bool raising, const FreeElem& v, int n) {
  if (i < 1 || i > n - 1) throw UsageError("adjoint index out of range");
  const Family f = v.family();
  // (alpha_i, eps_j) = delta_ij - delta_{i+1,j}
  auto pair_eps = [i](int j) { return (j == i ? 1 : 0) - (j == i + 1 ? 1 : 0); };
  FreeElem out(f);
  for (const auto& [w, c] : v.terms()) {
    for (const auto& g : w)
      if (g.kind != Generator::Kind::raise)
        throw UsageError("adjoint action defined on raise-only words");
    for (size_t k = 0; k < w.size(); ++k) {
      const int j = w[k].mode;
      if (raising) {
        if (j != i + 1) continue;
        int tw = 0;  // pairing with the weight of the prefix
        for (size_t t = 0; t < k; ++t) tw += pair_eps(w[t].mode);
        Word nw = w;
        nw[k] = Generator::make_raise(i);
        out.add_term(nw, c * qpow(tw));
      } else {
        if (j != i) continue;
        int tw = 0;  // pairing with the weight of the suffix
        for (size_t t = k + 1; t < w.size(); ++t) tw += pair_eps(w[t].mode);
        Word nw = w;
        nw[k] = Generator::make_raise(i + 1);
        out.add_term(nw, c * qpow(-tw));
      }
    }
  }
  return out;
}

namespace {

// Fraction-free span tracker over the cubic word basis: rows are integer
// polynomial vectors kept in echelon order by pivot column.
class PolySpan {
 public:
  explicit PolySpan(int dim) : dim_(dim) {}

  static std::vector<Poly> clear_denominators(const std::vector<ScalarQ>& v) {
    Poly common(1);
    for (const auto& a : v) {
      if (a.is_zero()) continue;
      Poly g = Poly::gcd(common, a.den());
      common = common * Poly::divide_exact(a.den(), g);
    }
    std::vector<Poly> row(v.size());
    for (size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      row[k] = v[k].num() * Poly::divide_exact(common, v[k].den());
    }
    return row;
  }

  // Reduce v against the echelon rows (fraction-free); the result is the
  // zero vector exactly when v lies in the current span.
  std::vector<Poly> reduce(std::vector<Poly> v) const {
    for (const auto& row : rows_) {
      const int p = pivot(row);
      if (p < 0) continue;
      if (v[static_cast<size_t>(p)].is_zero()) continue;
      const Poly a = row[static_cast<size_t>(p)];
      const Poly b = v[static_cast<size_t>(p)];
      for (size_t k = 0; k < v.size(); ++k)
        v[k] = v[k] * a - row[k] * b;
      normalize(v);
    }
    return v;
  }

  bool contains(const std::vector<ScalarQ>& v) const {
    auto r = reduce(clear_denominators(v));
    return pivot(r) < 0;
  }

  // Returns false if the vector was already in the span.
  bool insert(const std::vector<ScalarQ>& v) {
    auto r = reduce(clear_denominators(v));
    if (pivot(r) < 0) return false;
    rows_.push_back(std::move(r));
    std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) {
      return pivot(a) < pivot(b);
    });
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<std::vector<Poly>> rows_;

  static int pivot(const std::vector<Poly>& row) {
    for (size_t k = 0; k < row.size(); ++k)
      if (!row[k].is_zero()) return static_cast<int>(k);
    return -1;
  }

  static void normalize(std::vector<Poly>& v) {
    Poly g;
    for (const auto& a : v) {
      if (a.is_zero()) continue;
      g = Poly::gcd(g, a);
      if (g.degree() == 0 && g.leading() == 1) return;
    }
    if (g.is_zero() || (g.degree() == 0 && g.leading() == 1)) return;
    for (auto& a : v)
      if (!a.is_zero()) a = Poly::divide_exact(a, g);
  }
};

std::vector<ScalarQ> to_vector(const FreeElem& e, int n) {
  std::vector<ScalarQ> v(static_cast<size_t>(n) * n * n);
  for (const auto& [w, c] : e.terms()) {
    if (w.size() != 3) throw UsageError("cubic space expects length-3 words");
    std::int64_t idx = 0;
    for (const auto& g : w) idx = idx * n + (g.mode - 1);
    v[static_cast<size_t>(idx)] = c;
  }
  return v;
}

}  // namespace

ModuleClosure generate_module(int n, Family f) {
  auto states = lambda_states(n, f);
  PolySpan target_span(n * n * n);
  for (const auto& st : states) target_span.insert(to_vector(st.state, n));

  PolySpan span(n * n * n);
  std::deque<FreeElem> queue;
  FreeElem seed = lambda_state(n, f, false, n - 1, n, n);
  span.insert(to_vector(seed, n));
  queue.push_back(seed);

  ModuleClosure result;
  while (!queue.empty()) {
    FreeElem v = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= n - 1; ++i) {
      for (bool raising : {true, false}) {
        FreeElem w = ad_action(i, raising, v, n);
        if (w.is_zero()) continue;
        auto wv = to_vector(w, n);
        if (!target_span.contains(wv)) {
          result.stayed_inside = false;
          result.note = "adjoint image left the span of the labeled states";
        }
        if (span.insert(wv)) queue.push_back(std::move(w));
      }
    }
  }
  result.dimension = span.rank();
  return result;
}

long tableaux_count(int n) {
  // Hook shape with cells (1,1),(1,2),(2,1): rows weakly increase,
  // columns strictly increase.
  long count = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int c = a + 1; c <= n; ++c) ++count;
  return count;
}

namespace {

struct Arrow {
  LabeledState src, dst;
  int op;  // index of the raising adjoint generator
};

std::vector<Arrow> diagram_arrows(int n, Family f) {
  auto S = [&](bool tilde, int x, int y, int z) {
    return LabeledState{tilde, x, y, z, lambda_state(n, f, tilde, x, y, z)};
  };
  std::vector<Arrow> arrows;
  for (int t = 1; t <= n - 1; ++t) {
    const int m = n - t;
    for (int k = n - 1; k >= m + 1; --k)
      arrows.push_back({S(false, m, n, k + 1), S(false, m, n, k), k});
    arrows.push_back({S(false, m, n, m + 1), S(true, m, m, n), m});
    for (int j = m; j >= 2; --j)
      arrows.push_back({S(true, j, m, n), S(true, j - 1, m, n), j - 1});
    if (m >= 2) {
      for (int k = n; k >= m + 1; --k)
        arrows.push_back({S(false, m, n, k), S(false, m - 1, n, k), m - 1});
      for (int j = 1; j <= m - 1; ++j)
        arrows.push_back({S(true, j, m, n), S(true, j, m - 1, n), m - 1});
    }
  }
  return arrows;
}

}  // namespace

std::vector<CheckResult> module_checks(int n, Family f) {
  std::vector<CheckResult> out;

  FreeElem seed = lambda_state(n, f, false, n - 1, n, n);
  for (int i = 1; i <= n - 1; ++i) {
    FreeElem w = ad_action(i, false, seed, n);
    out.push_back({"modL.lowest", {i}, w.is_zero(),
                   w.is_zero() ? "" : w.str(),
                   "lowering generators kill the distinguished state"});
  }

  auto closure = generate_module(n, f);
  out.push_back({"modL.closure", {n}, closure.stayed_inside, closure.note,
                 "adjoint orbit stays inside the labeled states"});

  const long formula = static_cast<long>(n + 1) * n * (n - 1) / 3;
  const long tables = tableaux_count(n);
  {
    bool pass = closure.dimension == formula;
    out.push_back({"modL.dimension", {n}, pass,
                   pass ? ""
                        : "closure rank " + std::to_string(closure.dimension) +
                              " != " + std::to_string(formula),
                   "module dimension formula"});
  }
  {
    bool pass = tables == formula && closure.dimension == tables;
    out.push_back({"modL.tableaux", {n}, pass,
                   pass ? ""
                        : "tableau count " + std::to_string(tables) + " vs rank " +
                              std::to_string(closure.dimension),
                   "independent semistandard-filling count"});
  }

  for (const auto& arrow : diagram_arrows(n, f)) {
    FreeElem img = ad_action(arrow.op, true, arrow.src.state, n);
    ScalarQ ratio;
    bool pass = !img.is_zero() && img.proportional_to(arrow.dst.state, &ratio);
    out.push_back({"modL.diagram", [&] {
                     auto ix = arrow.src.idx();
                     ix.push_back(arrow.op);
                     return ix;
                   }(),
                   pass,
                   pass ? ""
                        : arrow.src.label() + " --" + std::to_string(arrow.op) +
                              "--> expected " + arrow.dst.label(),
                   "displayed raising arrows hold up to units"});
  }
  return out;
}

std::vector<CheckResult> serre_vanishing_checks(int n, Family f,
                                                const OscillatorRep& rep,
                                                const Evaluator& ev) {
  std::vector<CheckResult> out;
  for (const auto& st : lambda_states(n, f)) {
    auto cols = margin_safe_columns(rep, st.state);
    Verdict v = check_zero_on_columns(evaluate(st.state, rep), cols, ev);
    out.push_back({"modL.vanish", st.idx(), v.pass, v.residual,
                   "labeled states vanish in the representation"});
  }

  // Negative control: a cubic word that is not a relation must act
  // nontrivially. Needs a mode pattern the representation can absorb.
  Word w;
  bool have_control = false;
  if (f == Family::parabose && rep.cutoff() >= 2 && n >= 2) {
    w = {Generator::make_raise(1), Generator::make_raise(1), Generator::make_raise(2)};
    have_control = true;
  } else if (f == Family::parafermi && n >= 3) {
    w = {Generator::make_raise(1), Generator::make_raise(2), Generator::make_raise(3)};
    have_control = true;
  }
  if (have_control) {
    FreeElem e = FreeElem::from_word(f, w);
    auto cols = margin_safe_columns(rep, e);
    Verdict v = check_zero_on_columns(evaluate(e, rep), cols, ev);
    out.push_back({"modL.vanish.negative", {}, !v.pass,
                   v.pass ? "non-relation word evaluated to zero" : "",
                   "negative control detects a non-relation"});
  }
  return out;
}

}  // namespace paraq
