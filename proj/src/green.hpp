#pragma once

#include "hopf.hpp"

namespace paraq {

// Green components a^{+-(r)}_i inside the arity-p tensor representation,
// their Q-operators, and the anomalous quadratic relation suite.
//
// Components are kept as formal tensor elements (chains of triangular
// matrix entries around one oscillator letter) so that truncation margins
// can be read off the words before anything is evaluated.
class GreenSystem {
 public:
  GreenSystem(const OscillatorRep& rep, int order);

  const OscillatorRep& rep() const { return *rep_; }
  int order() const { return order_; }
  TensorRep tensor_rep() const { return {rep_, order_}; }

  // Chain expansion of the deformed component; sign +1 / -1.
  TensorElem component_elem(int sign, int mode, int r) const;
  // Classical component 1 x ... x a x ... x 1 (graded embedding).
  TensorElem classical_component_elem(int sign, int mode, int r) const;
  // Coproduct double-slice definition of Q^{+-(r)}_{ji}.
  TensorElem q_operator_elem(int sign, int j, int i, int r) const;

  // Sum of components against the p-fold coproduct, both signs, all modes.
  std::vector<CheckResult> check_sum(const Evaluator& ev,
                                     const OscillatorRep& eval_rep) const;
  // Vacuum normalization [p] delta_ij on the tensor vacuum.
  std::vector<CheckResult> check_vacuum(const Evaluator& ev = Evaluator::exact()) const;
  // The deformed quadratic exchange suite (r > s and r = s families).
  // When `with_corrections` is set, the deformation correction terms are
  // additionally asserted to vanish on their own (the s=1 degeneration).
  std::vector<CheckResult> check_anomalous(const Evaluator& ev,
                                           const OscillatorRep& eval_rep,
                                           bool with_corrections) const;
  // Q-operators: coproduct definition against the quadratic expansions.
  std::vector<CheckResult> check_qops(const Evaluator& ev = Evaluator::exact()) const;
  // Star reflection at the catalog level: the dual of every anomalous
  // instance is again a catalog instance.
  std::vector<CheckResult> check_closure() const;
  // Classical ansatz at s=1: native statistics at equal Green index,
  // opposite type across indices, and the component-sum identity.
  std::vector<CheckResult> check_classical() const;

 private:
  const OscillatorRep* rep_;
  int order_;
  HopfOps hopf_;
  std::vector<std::vector<FreeElem>> lplus_, lminus_;

  struct AnomalousInstance {
    std::string tag;       // relation family tag
    std::vector<int> idx;  // (i, j, r, s) with unused slots = 0
    TensorElem element;    // expected to vanish
    TensorElem correction; // deformation part, vanishes at s=1
  };
  std::vector<AnomalousInstance> anomalous_catalog() const;
};

}  // namespace paraq
