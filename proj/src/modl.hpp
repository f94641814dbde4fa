#pragma once

#include "fock.hpp"
#include "words.hpp"

namespace paraq {

// Labeled cubic state: the left-hand sides of the homogeneous relations,
// defined up to scalars. Plain states carry superscript pair (x,y) and
// subscript z with x < z <= y; tilde states have x <= y < z.
struct LabeledState {
  bool tilde{false};
  int x{0}, y{0}, z{0};
  FreeElem state;
  std::string label() const;
  std::vector<int> idx() const;
};

// The individual state by label; throws UsageError on an invalid index
// pattern for the requested kind.
FreeElem lambda_state(int n, Family f, bool tilde, int x, int y, int z);
// All states over the admissible index ranges:
//   plain (x,y;z): x<z<y together with the boundary z==y (x<y),
//   tilde (x,y;z): x<y<z together with the boundary x==y (y<z).
std::vector<LabeledState> lambda_states(int n, Family f);

// Adjoint action of the ladder generators indexed by 1..n-1 on cubic
// raise-only elements, extended over products with the weight-twisted
// Leibniz rule; raising replaces a letter of mode i+1 by mode i and
// lowering does the opposite.
FreeElem ad_action(int i, bool raising, const FreeElem& v, int n);

struct ModuleClosure {
  int dimension{0};
  bool stayed_inside{true};  // closure never left the span of the states
  std::string note;
};

// Orbit of the distinguished state under all adjoint generators, with the
// span tracked by fraction-free elimination over integer polynomials.
ModuleClosure generate_module(int n, Family f);

// Semistandard fillings of the three-box hook shape with entries in 1..n;
// independent counting oracle for the module dimension.
long tableaux_count(int n);

// modL.lowest / modL.closure / modL.dimension / modL.tableaux /
// modL.diagram records for one (n, family).
std::vector<CheckResult> module_checks(int n, Family f);

// modL.vanish: every labeled state evaluates to zero in the given
// representation, plus one deliberately non-vanishing cubic word as a
// negative control where the representation admits one.
std::vector<CheckResult> serre_vanishing_checks(
    int n, Family f, const OscillatorRep& rep,
    const Evaluator& ev = Evaluator::exact());

}  // namespace paraq
