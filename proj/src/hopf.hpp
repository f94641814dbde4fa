#pragma once

#include <vector>

#include "relations.hpp"

namespace paraq {

// Coproduct, counit and antipode on the oscillator letters, with the
// multiplicative / anti-multiplicative extensions and the iterated
// coproduct that builds order-p tensor representations.
class HopfOps {
 public:
  HopfOps(Family f, int n) : family_(f), modes_(n) {}

  Family family() const { return family_; }
  int modes() const { return modes_; }

  TensorElem coproduct(const Generator& g) const;  // arity 2
  ScalarQ counit(const Generator& g) const;
  FreeElem antipode(const Generator& g) const;

  // Algebra homomorphism into the graded square.
  TensorElem coproduct_ext(const FreeElem& e) const;
  ScalarQ counit_ext(const FreeElem& e) const;
  // Graded anti-homomorphism: S(ab) = (-1)^{deg a deg b} S(b) S(a].
  FreeElem antipode_ext(const FreeElem& e) const;

  // Apply the coproduct to one tensor slot (1-based), raising the arity
  // by one; slot 1 iterated is the canonical p-fold coproduct.
  TensorElem coproduct_at_slot(const TensorElem& t, int slot) const;
  TensorElem iterate_coproduct(const FreeElem& e, int p) const;  // p >= 1

  std::vector<Generator> generator_list() const;

 private:
  Family family_;
  int modes_;
  TensorElem coproduct_word(const Word& w) const;
  FreeElem antipode_word(const Word& w) const;
};

// Axiom sweep over all generators: coassociativity in rep^{x3}, the two
// counit laws in rep, both antipode laws in rep.
std::vector<CheckResult> hopf_axiom_checks(const HopfOps& hopf,
                                           const OscillatorRep& rep,
                                           const Evaluator& ev = Evaluator::exact());

// Ideal stability: Delta, counit and S of every catalog instance vanish
// in the corresponding representations.
std::vector<CheckResult> hopf_ideal_checks(const HopfOps& hopf,
                                           const std::vector<RelationInstance>& rels,
                                           const OscillatorRep& rep,
                                           const Evaluator& ev = Evaluator::exact());

// Entrywise coproduct of the triangular generator matrix against its
// matrix square, evaluated in rep^{x2}.
std::vector<CheckResult> lmatrix_coproduct_checks(const HopfOps& hopf,
                                                  const OscillatorRep& rep,
                                                  const Evaluator& ev = Evaluator::exact());

}  // namespace paraq
