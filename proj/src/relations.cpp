#include "relations.hpp"

namespace paraq {

const char* sigma_name(SigmaSign s) {
  return s == SigmaSign::plus ? "plus" : "minus";
}

int epsilon_sign(int i, int j) { return i < j ? 1 : (i > j ? -1 : 0); }

namespace {

int levi3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Sign of the permutation sending (i,j,k) to sorted order.
  int inv = (i > j) + (i > k) + (j > k);
  return inv % 2 ? -1 : 1;
}

FreeElem gen_raise(Family f, int i) {
  return FreeElem::generator(f, Generator::make_raise(i));
}
FreeElem gen_lower(Family f, int i) {
  return FreeElem::generator(f, Generator::make_lower(i));
}
FreeElem gen_cartan(Family f, int i, int e) {
  return FreeElem::generator(f, Generator::make_cartan(i, e));
}
FreeElem gen_ladder(Family f, int i, bool plus) {
  return plus ? gen_raise(f, i) : gen_lower(f, i);
}

ScalarQ qq() { return ScalarQ::spow(2) - ScalarQ::spow(-2); }  // q - q^-1
ScalarQ bracket2() { return ScalarQ::spow(1) + ScalarQ::spow(-1); }  // [2]

}  // namespace

int theta_coeff(int i, int j, int k) {
  int e = epsilon_sign(i, j) * levi3(i, j, k) *
          (epsilon_sign(j, k) - epsilon_sign(i, k));
  return e / 2;
}

int sigma_coeff(int i, int j, SigmaSign s) {
  return epsilon_sign(i, j) + (s == SigmaSign::plus ? 1 : -1) * (i == j ? 1 : 0);
}

std::vector<RelationInstance> classical_relations(int n, Family f) {
  std::vector<RelationInstance> out;
  const std::string ref = "trilinear exchange relations, classical";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        FreeElem mixed = supercomm(gen_raise(f, i), gen_lower(f, j));
        {
          FreeElem e = supercomm(mixed, gen_raise(f, k)) -
                       gen_raise(f, i).scaled(ScalarQ(j == k ? 2 : 0));
          out.push_back({"classical.I", f, {i, j, k}, e, ref});
        }
        {
          FreeElem e = supercomm(mixed, gen_lower(f, k)) +
                       gen_lower(f, j).scaled(ScalarQ(i == k ? 2 : 0));
          out.push_back({"classical.Istar", f, {i, j, k}, e, ref});
        }
        {
          FreeElem e = supercomm(supercomm(gen_raise(f, i), gen_raise(f, j)),
                                 gen_raise(f, k));
          out.push_back({"classical.II", f, {i, j, k}, e, ref});
        }
        {
          FreeElem e = supercomm(supercomm(gen_lower(f, i), gen_lower(f, j)),
                                 gen_lower(f, k));
          out.push_back({"classical.IIstar", f, {i, j, k}, e, ref});
        }
      }
    }
  }
  return out;
}

std::vector<RelationInstance> relations_eq_i(int n, Family f, SigmaSign s) {
  std::vector<RelationInstance> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        FreeElem lhs = graded_qcomm(
            supercomm(gen_raise(f, i), gen_lower(f, j)), gen_raise(f, k),
            ScalarQ::spow(i == k ? -2 * sigma_coeff(j, k, s) : 0));
        FreeElem rhs(f);
        if (j == k) {
          rhs += (gen_raise(f, i) * gen_cartan(f, j, sigma_coeff(i, j, s)))
                     .scaled(bracket2());
        }
        const int th = theta_coeff(i, j, k);
        if (th != 0) {
          rhs += (gen_raise(f, i) * supercomm(gen_raise(f, k), gen_lower(f, j)))
                     .scaled(qq() * ScalarQ(th));
        }
        out.push_back({"thm1.I", f, {i, j, k}, lhs - rhs,
                       "twisted mixed trilinear relation (raise)"});
      }
    }
  }
  return out;
}

std::vector<RelationInstance> relations_eq_istar(int n, Family f, SigmaSign s) {
  // Star conjugate of the raise-side family: the twist prefactor
  // q^{-delta_jk sigma_ik} multiplies the whole right-hand side and the
  // cartan factor carries sigma with transposed indices.
  std::vector<RelationInstance> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        const ScalarQ twist =
            ScalarQ::spow(j == k ? -2 * sigma_coeff(i, k, s) : 0);
        FreeElem lhs = graded_qcomm(
            supercomm(gen_raise(f, i), gen_lower(f, j)), gen_lower(f, k), twist);
        FreeElem rhs(f);
        if (i == k) {
          rhs -= (gen_cartan(f, i, -sigma_coeff(j, i, s)) * gen_lower(f, j))
                     .scaled(bracket2() * twist);
        }
        const int th = theta_coeff(j, i, k);
        if (th != 0) {
          rhs += (supercomm(gen_raise(f, i), gen_lower(f, k)) * gen_lower(f, j))
                     .scaled(qq() * ScalarQ(th) * twist);
        }
        out.push_back({"thm1.Istar", f, {i, j, k}, lhs - rhs,
                       "twisted mixed trilinear relation (lower)"});
      }
    }
  }
  return out;
}

std::vector<RelationInstance> theorem1_relations(int n, Family f, SigmaChoice sc) {
  std::vector<RelationInstance> out;

  for (int i = 1; i <= n; ++i) {
    for (int e : {+1, -1}) {
      FreeElem x = gen_cartan(f, i, e) * gen_cartan(f, i, -e) - FreeElem::unit(f);
      out.push_back({"thm1.cartan.inv", f, {i, e}, x, "cartan letters invert"});
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int e1 : {+1, -1})
        for (int e2 : {+1, -1}) {
          FreeElem x = gen_cartan(f, i, e1) * gen_cartan(f, j, e2) -
                       gen_cartan(f, j, e2) * gen_cartan(f, i, e1);
          out.push_back({"thm1.cartan.comm", f, {i, j, e1, e2}, x,
                         "cartan letters commute"});
        }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int sgn : {+1, -1}) {
        FreeElem a = gen_ladder(f, j, sgn > 0);
        FreeElem x = gen_cartan(f, i, +1) * a * gen_cartan(f, i, -1) -
                     a.scaled(ScalarQ::spow(sgn * (i == j ? 2 : 0)));
        out.push_back({"thm1.fe.conj", f, {i, j, sgn}, x,
                       "cartan conjugation twist"});
      }
    }
    FreeElem fe = supercomm(gen_raise(f, i), gen_lower(f, i)) -
                  (gen_cartan(f, i, +1) - gen_cartan(f, i, -1))
                      .scaled(ScalarQ::omega().inverse());
    out.push_back({"thm1.fe", f, {i}, fe, "mixed bracket equals cartan bracket"});
  }

  for (auto& r : relations_eq_i(n, f, sc.eq_i)) out.push_back(std::move(r));
  for (auto& r : relations_eq_istar(n, f, sc.eq_istar)) out.push_back(std::move(r));

  for (int sgn : {+1, -1}) {
    const bool plus = sgn > 0;
    for (int i1 = 1; i1 <= n; ++i1)
      for (int i2 = i1 + 1; i2 <= n; ++i2)
        for (int i3 = i2; i3 <= n; ++i3) {
          FreeElem e =
              graded_qcomm(supercomm(gen_ladder(f, i1, plus), gen_ladder(f, i3, plus)),
                           gen_ladder(f, i2, plus), ScalarQ::spow(4)) +
              supercomm(supercomm(gen_ladder(f, i1, plus), gen_ladder(f, i2, plus)),
                        gen_ladder(f, i3, plus))
                  .scaled(ScalarQ::spow(2));
          out.push_back({"thm1.II", f, {sgn, i1, i2, i3}, e,
                         "homogeneous cubic relation"});
        }
    for (int i1 = 1; i1 <= n; ++i1)
      for (int i2 = i1; i2 <= n; ++i2)
        for (int i3 = i2 + 1; i3 <= n; ++i3) {
          FreeElem e =
              graded_qcomm(gen_ladder(f, i2, plus),
                           supercomm(gen_ladder(f, i1, plus), gen_ladder(f, i3, plus)),
                           ScalarQ::spow(4)) +
              supercomm(gen_ladder(f, i1, plus),
                        supercomm(gen_ladder(f, i2, plus), gen_ladder(f, i3, plus)))
                  .scaled(ScalarQ::spow(2));
          out.push_back({"thm1.IIstar", f, {sgn, i1, i2, i3}, e,
                         "homogeneous cubic relation (twisted order)"});
        }
  }
  return out;
}

FreeElem chevalley_E(int n, Family f, int i, bool positive) {
  if (i < 1 || i > n) throw UsageError("chevalley index out of range");
  if (i == n) return positive ? gen_raise(f, n) : gen_lower(f, n);
  const ScalarQ inv2 = bracket2().inverse();
  if (positive) {
    return (gen_cartan(f, i + 1, -1) *
            supercomm(gen_raise(f, i), gen_lower(f, i + 1)))
        .scaled(inv2);
  }
  return (supercomm(gen_raise(f, i + 1), gen_lower(f, i)) *
          gen_cartan(f, i + 1, +1))
      .scaled(inv2);
}

FreeElem a_from_chevalley(int n, Family f, int i, bool plus) {
  if (i < 1 || i > n) throw UsageError("index out of range");
  if (plus) {
    FreeElem x = chevalley_E(n, f, n, true);
    for (int j = n - 1; j >= i; --j)
      x = graded_qcomm(chevalley_E(n, f, j, true), x, ScalarQ::spow(-2));
    return x;
  }
  FreeElem x = chevalley_E(n, f, n, false);
  for (int j = n - 1; j >= i; --j)
    x = graded_qcomm(x, chevalley_E(n, f, j, false), ScalarQ::spow(2));
  return x;
}

FreeElem chevalley_cartan(int n, Family f, int i, int e) {
  if (i == n) return gen_cartan(f, n, e);
  return gen_cartan(f, i, e) * gen_cartan(f, i + 1, -e);
}

int cartan_pairing(int n, int i, int j) {
  // (alpha_i, alpha_j) with alpha_i = eps_i - eps_{i+1} (i<n), alpha_n = eps_n.
  auto dot = [n](int a, int b) {
    int v = 0;
    // eps-coordinates of alpha_a: +1 at a, -1 at a+1 (absent when a == n).
    for (int t = 0; t < 2; ++t) {
      int pos_a = t == 0 ? a : a + 1;
      int sgn_a = t == 0 ? 1 : -1;
      if (pos_a > n) continue;
      for (int u = 0; u < 2; ++u) {
        int pos_b = u == 0 ? b : b + 1;
        int sgn_b = u == 0 ? 1 : -1;
        if (pos_b > n) continue;
        if (pos_a == pos_b) v += sgn_a * sgn_b;
      }
    }
    return v;
  };
  return dot(i, j);
}

std::vector<RelationInstance> chevalley_relations(int n, Family f) {
  std::vector<RelationInstance> out;
  auto E = [&](int i, bool pos) { return chevalley_E(n, f, i, pos); };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int sgn : {+1, -1}) {
        FreeElem x = chevalley_cartan(n, f, i, +1) * E(j, sgn > 0) *
                         chevalley_cartan(n, f, i, -1) -
                     E(j, sgn > 0).scaled(ScalarQ::spow(2 * sgn * cartan_pairing(n, i, j)));
        out.push_back({"quea.cartan.conj", f, {i, j, sgn}, x,
                       "simple-root conjugation twist"});
      }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        FreeElem lhs = supercomm(E(i, true), E(i, false));
        if (i < n) lhs = lhs.scaled(bracket2());
        FreeElem rhs = (chevalley_cartan(n, f, i, +1) - chevalley_cartan(n, f, i, -1))
                           .scaled(ScalarQ::omega().inverse());
        if (i < n) {
          out.push_back({"quea.mixed", f, {i, j}, lhs - rhs,
                         "ladder pairing onto the cartan bracket"});
        } else {
          out.push_back({"quea.mixed", f, {i, j}, lhs - rhs,
                         "odd-root pairing onto the cartan bracket"});
        }
      } else {
        out.push_back({"quea.mixed", f, {i, j}, supercomm(E(i, true), E(j, false)),
                       "mixed ladder brackets vanish"});
      }
    }

  for (int sgn : {+1, -1}) {
    const bool pos = sgn > 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j)
        out.push_back({"quea.ortho", f, {i, j, sgn},
                       supercomm(E(i, pos), E(j, pos)),
                       "distant simple roots commute"});
    for (int i = 1; i + 2 <= n; ++i) {
      FreeElem x = graded_qcomm(
          E(i + 1, pos), graded_qcomm(E(i + 1, pos), E(i, pos), ScalarQ::spow(2)),
          ScalarQ::spow(-2));
      out.push_back({"quea.serre", f, {1, i, sgn}, x, "cubic Serre relation"});
    }
    for (int i = 1; i + 1 <= n; ++i) {
      FreeElem x = graded_qcomm(
          E(i, pos), graded_qcomm(E(i, pos), E(i + 1, pos), ScalarQ::spow(2)),
          ScalarQ::spow(-2));
      out.push_back({"quea.serre", f, {2, i, sgn}, x, "cubic Serre relation"});
    }
    if (n >= 2) {
      FreeElem a = graded_qcomm(E(n - 1, pos), E(n, pos), ScalarQ::spow(-2));
      FreeElem b = supercomm(a, E(n, pos));
      FreeElem x = graded_qcomm(b, E(n, pos), ScalarQ::spow(2));
      out.push_back({"quea.serre", f, {3, n - 1, sgn}, x,
                     "quartic Serre relation at the short root"});
    }
  }

  for (int i = 1; i <= n; ++i)
    for (int sgn : {+1, -1}) {
      FreeElem x = a_from_chevalley(n, f, i, sgn > 0) - gen_ladder(f, i, sgn > 0);
      out.push_back({"quea.roundtrip", f, {i, sgn}, x,
                     "ladder letters recovered from nested q-commutators"});
    }

  return out;
}

std::vector<std::vector<FreeElem>> lmatrix_plus(int n, Family f) {
  std::vector<std::vector<FreeElem>> L(
      static_cast<size_t>(n + 1),
      std::vector<FreeElem>(static_cast<size_t>(n + 1), FreeElem(f)));
  for (int i = 1; i <= n; ++i) {
    L[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = gen_cartan(f, i, +1);
    for (int j = i + 1; j <= n; ++j)
      L[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
          supercomm(gen_raise(f, i), gen_lower(f, j)).scaled(ScalarQ::omega());
    L[static_cast<size_t>(i - 1)][static_cast<size_t>(n)] =
        gen_raise(f, i).scaled(ScalarQ::cconst());
  }
  L[static_cast<size_t>(n)][static_cast<size_t>(n)] = FreeElem::unit(f);
  return L;
}

std::vector<std::vector<FreeElem>> lmatrix_minus(int n, Family f, StarConvention sc) {
  auto Lp = lmatrix_plus(n, f);
  std::vector<std::vector<FreeElem>> L(
      static_cast<size_t>(n + 1),
      std::vector<FreeElem>(static_cast<size_t>(n + 1), FreeElem(f)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      L[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          Lp[static_cast<size_t>(i)][static_cast<size_t>(j)].star(sc);
  return L;
}

std::vector<CheckResult> lmatrix_structure_checks(int n, Family f,
                                                  StarConvention sc) {
  std::vector<CheckResult> out;
  auto Lp = lmatrix_plus(n, f);
  auto Lm = lmatrix_minus(n, f, sc);
  for (int i = 1; i <= n + 1; ++i) {
    for (int k = 1; k <= n + 1; ++k) {
      const auto& up = Lp[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)];
      const auto& lo = Lm[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)];
      bool pass = true;
      std::string residual;
      if (i > k && !up.is_zero()) {
        pass = false;
        residual = "upper matrix has a lower-triangle entry";
      }
      if (i < k && !lo.is_zero()) {
        pass = false;
        residual = "lower matrix has an upper-triangle entry";
      }
      if (i == k) {
        FreeElem want_up =
            i <= n ? FreeElem::generator(f, Generator::make_cartan(i, +1))
                   : FreeElem::unit(f);
        FreeElem want_lo =
            i <= n ? FreeElem::generator(f, Generator::make_cartan(i, -1))
                   : FreeElem::unit(f);
        if (!((up - want_up).is_zero() && (lo - want_lo).is_zero())) {
          pass = false;
          residual = "diagonal entry mismatch";
        }
      }
      out.push_back({"lmatrix.entry", {i, k}, pass, residual,
                     "triangular generator matrix structure"});
    }
  }
  return out;
}

}  // namespace paraq
