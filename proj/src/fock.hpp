#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "words.hpp"

namespace paraq {

// A representation ansatz failed its own verification.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Column-major sparse matrix over ScalarQ. The representations used here
// are monomial (at most one nonzero per column for every word image), so
// maps stay small; no zero entries are stored.
class SparseMat {
 public:
  SparseMat() = default;
  explicit SparseMat(std::int64_t dim) : dim_(dim) {}
  static SparseMat identity(std::int64_t dim);

  std::int64_t dim() const { return dim_; }
  const std::map<std::int64_t, std::map<std::int64_t, ScalarQ>>& cols() const {
    return cols_;
  }

  void add(std::int64_t r, std::int64_t c, const ScalarQ& v);
  ScalarQ at(std::int64_t r, std::int64_t c) const;

  SparseMat operator*(const SparseMat& o) const;
  SparseMat& operator+=(const SparseMat& o);
  SparseMat& operator-=(const SparseMat& o);
  friend SparseMat operator+(SparseMat a, const SparseMat& b) { return a += b; }
  friend SparseMat operator-(SparseMat a, const SparseMat& b) { return a -= b; }
  SparseMat scaled(const ScalarQ& c) const;
  SparseMat kron(const SparseMat& o) const;

  bool operator==(const SparseMat& o) const;
  bool is_zero() const { return cols_.empty(); }

  // Column as a sparse vector (empty map if zero).
  std::map<std::int64_t, ScalarQ> column(std::int64_t c) const;

  std::int64_t entry_count() const;

 private:
  std::int64_t dim_{0};
  std::map<std::int64_t, std::map<std::int64_t, ScalarQ>> cols_;
};

// Occupation-number basis with a fixed lexicographic order, so matrix
// indices are deterministic: index = sum n_i * (cutoff+1)^(modes-i).
struct OccBasis {
  int modes{0};
  int cutoff{0};
  std::int64_t dim{0};

  OccBasis() = default;
  OccBasis(int m, int d);
  std::int64_t index(const std::vector<int>& occ) const;
  std::vector<int> occ(std::int64_t idx) const;
};

// The order p=1 deformed oscillator representation on a truncated basis:
// fermi flavor for the parafermi family (occupations 0/1, exact), bose
// flavor for parabose (cutoff d, exact on margin-safe columns).
class OscillatorRep {
 public:
  static OscillatorRep build(Family f, int modes, int cutoff);

  Family family() const { return family_; }
  int modes() const { return basis_.modes; }
  int cutoff() const { return basis_.cutoff; }
  std::int64_t dim() const { return basis_.dim; }
  const OccBasis& basis() const { return basis_; }

  const SparseMat& gen_matrix(const Generator& g) const;
  const SparseMat& parity_op() const { return parity_; }
  // diag q^{+-N_i}
  const SparseMat& number_power(int mode, int sign) const;

  // a+- matrices specialized at s=1, cartan matrices kept symbolic; the
  // classical-limit suites assert entrywise vanishing at s=1 afterwards.
  OscillatorRep classicalized() const;
  // Everything specialized at a rational point s0 (spot-check mode).
  OscillatorRep specialized(const Rational& s0) const;

 private:
  OscillatorRep() = default;
  Family family_{Family::parafermi};
  OccBasis basis_;
  std::vector<SparseMat> raise_, lower_, cartan_p_, cartan_m_;
  std::vector<SparseMat> num_p_, num_m_;
  SparseMat parity_;
};

struct TensorRep {
  const OscillatorRep* base{nullptr};
  int arity{1};
  std::int64_t dim() const;
};

SparseMat evaluate(const FreeElem& e, const OscillatorRep& rep);
SparseMat evaluate_word(const Word& w, const OscillatorRep& rep);
// Graded embedding: the matrix of u_1 (x) ... (x) u_p is the Kronecker
// product of pi(u_k) * Parity^{e_k} with e_k = sum_{l>k} deg(u_l) mod 2,
// which makes evaluation multiplicative for the signed tensor product.
SparseMat evaluate_tensor(const TensorElem& e, const TensorRep& trep);

// Margin-safe columns: basis states v such that no word of the element can
// push any bose mode above the cutoff when applied to v. For fermi
// representations every column is safe.
std::vector<std::int64_t> margin_safe_columns(const OscillatorRep& rep,
                                              const std::vector<int>& bound);
std::vector<std::int64_t> margin_safe_columns(
    const TensorRep& trep, const std::vector<std::vector<int>>& bounds);
std::vector<std::int64_t> margin_safe_columns(const OscillatorRep& rep,
                                              const FreeElem& e);
std::vector<std::int64_t> margin_safe_columns(const TensorRep& trep,
                                              const TensorElem& e);

// How a suite decides that an entry vanishes: exactly as an element of
// Q(s), or after substitution at a rational point (s=1 for the classical
// limit). A pole at the substitution point counts as a failure.
struct Evaluator {
  bool symbolic{true};
  Rational point{1};
  static Evaluator exact() { return {true, Rational(1)}; }
  static Evaluator at(const Rational& s0) { return {false, s0}; }
  bool entry_vanishes(const ScalarQ& v, std::string* why) const;
};

struct Verdict {
  bool pass{true};
  std::string residual;  // rendering of the first offending entry
};

Verdict check_zero_on_columns(const SparseMat& m,
                              const std::vector<std::int64_t>& cols,
                              const Evaluator& ev);

// Evaluates only the requested columns of a tensor element and tests them
// against zero; never materializes the Kronecker products, which keeps
// high-arity checks affordable.
Verdict check_tensor_zero_on_columns(const TensorElem& e, const TensorRep& trep,
                                     const std::vector<std::int64_t>& cols,
                                     const Evaluator& ev);

// Single check outcome; suites collect these and the runner stamps the
// suite tag on top.
struct CheckResult {
  std::string name;
  std::vector<int> indices;
  bool pass{true};
  std::string residual;
  std::string ref;  // short provenance note for the report
};

// The oscillator exchange-relation suite the constructor certifies: all
// two-mode q-oscillator relations plus the vacuum normalization
// pi(a-_i) pi(a+_j) |0> = delta_ij |0>.
std::vector<CheckResult> verify_oscillator_relations(
    const OscillatorRep& rep, const Evaluator& ev = Evaluator::exact());

}  // namespace paraq
