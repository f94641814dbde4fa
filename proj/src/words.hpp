#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scalarq.hpp"

namespace paraq {

enum class Family : std::uint8_t { parafermi, parabose };

// Reversal convention of the star anti-involution on a graded word; the
// catalog suites pick one per family at run time (see relations.hpp).
enum class StarConvention : std::uint8_t { plain, graded };

const char* family_name(Family f);

struct Generator {
  enum class Kind : std::uint8_t { raise, lower, cartan };
  Kind kind{Kind::raise};
  std::int16_t mode{1};  // 1-based mode index
  std::int8_t cexp{0};   // +1 / -1 for cartan letters, 0 otherwise

  static Generator make_raise(int i) { return {Kind::raise, static_cast<std::int16_t>(i), 0}; }
  static Generator make_lower(int i) { return {Kind::lower, static_cast<std::int16_t>(i), 0}; }
  static Generator make_cartan(int i, int e) {
    return {Kind::cartan, static_cast<std::int16_t>(i), static_cast<std::int8_t>(e)};
  }

  bool is_ladder() const { return kind != Kind::cartan; }
  // Ladder letters are odd in the parabose family, everything else even.
  int parity(Family f) const {
    return (f == Family::parabose && is_ladder()) ? 1 : 0;
  }
  Generator starred() const;  // raise <-> lower, cartan exponent flipped

  auto operator<=>(const Generator&) const = default;
};

using Word = std::vector<Generator>;

int word_parity(const Word& w, Family f);
// Number of raise letters per mode (1-based modes, vector of length n).
std::vector<int> raise_degrees(const Word& w, int modes);
std::string word_str(const Word& w);

// Finitely supported linear combination of words over ScalarQ: the free
// graded algebra on a+-_i, q^{+-h_i}. No rewriting happens here; relation
// elements are stored verbatim and all vanishing judgments are delegated
// to representation evaluation.
class FreeElem {
 public:
  explicit FreeElem(Family f) : family_(f) {}
  static FreeElem unit(Family f) { return from_word(f, Word{}); }
  static FreeElem generator(Family f, Generator g) { return from_word(f, Word{g}); }
  static FreeElem from_word(Family f, Word w, ScalarQ c = ScalarQ(1));

  Family family() const { return family_; }
  const std::map<Word, ScalarQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const ScalarQ& c);

  FreeElem operator-() const;
  FreeElem& operator+=(const FreeElem& o);
  FreeElem& operator-=(const FreeElem& o);
  friend FreeElem operator+(FreeElem a, const FreeElem& b) { return a += b; }
  friend FreeElem operator-(FreeElem a, const FreeElem& b) { return a -= b; }
  FreeElem operator*(const FreeElem& o) const;  // concatenation product
  FreeElem scaled(const ScalarQ& c) const;
  bool operator==(const FreeElem& o) const {
    return family_ == o.family_ && terms_ == o.terms_;
  }

  // Parity of a homogeneous element; throws UsageError otherwise.
  int parity() const;
  // Per-mode maximum raise degree over all words (truncation margins).
  std::vector<int> max_raise_degrees(int modes) const;

  FreeElem star(StarConvention sc) const;

  // True if *this == ratio * o for some nonzero scalar; reports the ratio.
  bool proportional_to(const FreeElem& o, ScalarQ* ratio = nullptr) const;

  std::string str() const;

 private:
  Family family_;
  std::map<Word, ScalarQ> terms_;
};

// Graded q-commutator [[a,b]]_lam = ab - (-1)^{deg a deg b} lam ba.
// Either argument may be a sum but must be parity-homogeneous.
FreeElem graded_qcomm(const FreeElem& a, const FreeElem& b, const ScalarQ& lam);
// Supercommutator [[a,b]] = graded_qcomm with lam = 1.
FreeElem supercomm(const FreeElem& a, const FreeElem& b);
// Ungraded q-commutator ab - lam ba (grading forced even).
FreeElem qcomm(const FreeElem& a, const FreeElem& b, const ScalarQ& lam);

// Formal sums of p-fold tensor words. Multiplication carries the Koszul
// sign (-1)^{sum_{k>l} deg(u_k) deg(v_l)}; in the parafermi family the
// sign is always +1.
class TensorElem {
 public:
  TensorElem(Family f, int arity) : family_(f), arity_(arity) {}
  static TensorElem unit(Family f, int arity);
  static TensorElem from_free(const FreeElem& e);  // arity 1
  // Multilinear expansion of u_1 (x) ... (x) u_p; no crossing signs occur
  // when forming an elementary tensor.
  static TensorElem elementary(const std::vector<FreeElem>& slots);

  Family family() const { return family_; }
  int arity() const { return arity_; }
  const std::map<std::vector<Word>, ScalarQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<Word>& t, const ScalarQ& c);

  TensorElem operator-() const;
  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  TensorElem operator*(const TensorElem& o) const;
  TensorElem scaled(const ScalarQ& c) const;
  bool operator==(const TensorElem& o) const {
    return family_ == o.family_ && arity_ == o.arity_ && terms_ == o.terms_;
  }

  // Juxtaposition (u_1...u_r) (x) (v_1...v_t) into arity r+t, no signs.
  TensorElem concat(const TensorElem& right) const;

  int parity() const;  // homogeneous only
  // Per slot, per mode maximum raise degree.
  std::vector<std::vector<int>> max_raise_degrees(int modes) const;

  std::string str() const;

 private:
  Family family_;
  int arity_;
  std::map<std::vector<Word>, ScalarQ> terms_;
};

TensorElem graded_qcomm(const TensorElem& a, const TensorElem& b, const ScalarQ& lam);
TensorElem supercomm(const TensorElem& a, const TensorElem& b);

}  // namespace paraq
