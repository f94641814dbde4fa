#include "words.hpp"

#include <algorithm>
#include <sstream>

namespace paraq {

const char* family_name(Family f) {
  return f == Family::parafermi ? "parafermi" : "parabose";
}

Generator Generator::starred() const {
  switch (kind) {
    case Kind::raise:
      return make_lower(mode);
    case Kind::lower:
      return make_raise(mode);
    case Kind::cartan:
      return make_cartan(mode, -cexp);
  }
  return *this;
}

int word_parity(const Word& w, Family f) {
  if (f == Family::parafermi) return 0;
  int p = 0;
  for (const auto& g : w) p ^= g.parity(f);
  return p;
}

std::vector<int> raise_degrees(const Word& w, int modes) {
  std::vector<int> d(static_cast<size_t>(modes), 0);
  for (const auto& g : w)
    if (g.kind == Generator::Kind::raise) d[static_cast<size_t>(g.mode - 1)]++;
  return d;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += " ";
    switch (g.kind) {
      case Generator::Kind::raise:
        out += "a+[" + std::to_string(g.mode) + "]";
        break;
      case Generator::Kind::lower:
        out += "a-[" + std::to_string(g.mode) + "]";
        break;
      case Generator::Kind::cartan:
        out += (g.cexp > 0 ? "qh[" : "qh^-1[") + std::to_string(g.mode) + "]";
        break;
    }
  }
  return out;
}

FreeElem FreeElem::from_word(Family f, Word w, ScalarQ c) {
  FreeElem e(f);
  e.add_term(w, c);
  return e;
}

void FreeElem::add_term(const Word& w, const ScalarQ& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeElem FreeElem::operator-() const {
  FreeElem r(family_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
  if (family_ != o.family_) throw UsageError("family mismatch in add");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& o) {
  if (family_ != o.family_) throw UsageError("family mismatch in sub");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeElem FreeElem::operator*(const FreeElem& o) const {
  if (family_ != o.family_) throw UsageError("family mismatch in mul");
  FreeElem r(family_);
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

FreeElem FreeElem::scaled(const ScalarQ& c) const {
  FreeElem r(family_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
  return r;
}

int FreeElem::parity() const {
  if (terms_.empty()) return 0;
  int p = word_parity(terms_.begin()->first, family_);
  for (const auto& [w, c] : terms_)
    if (word_parity(w, family_) != p)
      throw UsageError("parity of an inhomogeneous element");
  return p;
}

std::vector<int> FreeElem::max_raise_degrees(int modes) const {
  std::vector<int> m(static_cast<size_t>(modes), 0);
  for (const auto& [w, c] : terms_) {
    auto d = raise_degrees(w, modes);
    for (int i = 0; i < modes; ++i)
      m[static_cast<size_t>(i)] = std::max(m[static_cast<size_t>(i)], d[static_cast<size_t>(i)]);
  }
  return m;
}

FreeElem FreeElem::star(StarConvention sc) const {
  FreeElem r(family_);
  for (const auto& [w, c] : terms_) {
    Word sw;
    sw.reserve(w.size());
    int odd = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) sw.push_back(it->starred());
    for (const auto& g : w) odd += g.parity(family_);
    ScalarQ coeff = c.bar();
    // Graded reversal of k odd letters picks up (-1)^{k(k-1)/2}.
    if (sc == StarConvention::graded && ((odd * (odd - 1) / 2) % 2) != 0)
      coeff = -coeff;
    r.add_term(sw, coeff);
  }
  return r;
}

bool FreeElem::proportional_to(const FreeElem& o, ScalarQ* ratio) const {
  if (family_ != o.family_) return false;
  if (is_zero() || o.is_zero()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.find(it->first);
  if (jt == o.terms_.end()) return false;
  ScalarQ r = it->second / jt->second;
  if (!(*this == o.scaled(r))) return false;
  if (ratio) *ratio = r;
  return true;
}

std::string FreeElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.str() << ")*" << word_str(w);
    first = false;
  }
  return os.str();
}

FreeElem graded_qcomm(const FreeElem& a, const FreeElem& b, const ScalarQ& lam) {
  if (a.family() != b.family()) throw UsageError("family mismatch in bracket");
  int sign = (a.parity() * b.parity()) % 2;
  ScalarQ coeff = sign ? lam : -lam;
  return a * b + (b * a).scaled(coeff);
}

FreeElem supercomm(const FreeElem& a, const FreeElem& b) {
  return graded_qcomm(a, b, ScalarQ(1));
}

FreeElem qcomm(const FreeElem& a, const FreeElem& b, const ScalarQ& lam) {
  return a * b - (b * a).scaled(lam);
}

TensorElem TensorElem::unit(Family f, int arity) {
  TensorElem t(f, arity);
  t.add_term(std::vector<Word>(static_cast<size_t>(arity)), ScalarQ(1));
  return t;
}

TensorElem TensorElem::from_free(const FreeElem& e) {
  TensorElem t(e.family(), 1);
  for (const auto& [w, c] : e.terms()) t.add_term({w}, c);
  return t;
}

TensorElem TensorElem::elementary(const std::vector<FreeElem>& slots) {
  if (slots.empty()) throw UsageError("empty tensor");
  Family f = slots.front().family();
  TensorElem t(f, static_cast<int>(slots.size()));
  std::vector<Word> tuple(slots.size());
  ScalarQ coeff(1);
  // Depth-first multilinear expansion.
  auto rec = [&](auto&& self, size_t k, const ScalarQ& acc) -> void {
    if (k == slots.size()) {
      t.add_term(tuple, acc);
      return;
    }
    if (slots[k].family() != f) throw UsageError("family mismatch in tensor");
    for (const auto& [w, c] : slots[k].terms()) {
      tuple[k] = w;
      self(self, k + 1, acc * c);
    }
  };
  rec(rec, 0, coeff);
  return t;
}

void TensorElem::add_term(const std::vector<Word>& t, const ScalarQ& c) {
  if (static_cast<int>(t.size()) != arity_) throw UsageError("arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElem TensorElem::operator-() const {
  TensorElem r(family_, arity_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
  return r;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (family_ != o.family_ || arity_ != o.arity_)
    throw UsageError("tensor family/arity mismatch in add");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  if (family_ != o.family_ || arity_ != o.arity_)
    throw UsageError("tensor family/arity mismatch in sub");
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

TensorElem TensorElem::operator*(const TensorElem& o) const {
  if (family_ != o.family_) throw UsageError("tensor family mismatch in mul");
  if (arity_ != o.arity_) throw UsageError("tensor arity mismatch in mul");
  TensorElem r(family_, arity_);
  for (const auto& [ta, ca] : terms_) {
    // Crossing sign: u_k moves past v_l for every k > l.
    std::vector<int> pa(static_cast<size_t>(arity_));
    for (int k = 0; k < arity_; ++k)
      pa[static_cast<size_t>(k)] = word_parity(ta[static_cast<size_t>(k)], family_);
    for (const auto& [tb, cb] : o.terms_) {
      int cross = 0;
      int vprefix = 0;  // sum of deg(v_l), l < k
      for (int k = 0; k < arity_; ++k) {
        if (k > 0) vprefix += word_parity(tb[static_cast<size_t>(k - 1)], family_);
        cross += pa[static_cast<size_t>(k)] * vprefix;
      }
      std::vector<Word> t(static_cast<size_t>(arity_));
      for (int k = 0; k < arity_; ++k) {
        t[static_cast<size_t>(k)] = ta[static_cast<size_t>(k)];
        const Word& w = tb[static_cast<size_t>(k)];
        t[static_cast<size_t>(k)].insert(t[static_cast<size_t>(k)].end(), w.begin(), w.end());
      }
      ScalarQ c = ca * cb;
      if (cross % 2) c = -c;
      r.add_term(t, c);
    }
  }
  return r;
}

TensorElem TensorElem::scaled(const ScalarQ& c) const {
  TensorElem r(family_, arity_);
  if (c.is_zero()) return r;
  for (const auto& [t, v] : terms_) r.terms_.emplace(t, v * c);
  return r;
}

TensorElem TensorElem::concat(const TensorElem& right) const {
  if (family_ != right.family_) throw UsageError("tensor family mismatch in concat");
  TensorElem r(family_, arity_ + right.arity_);
  for (const auto& [ta, ca] : terms_) {
    for (const auto& [tb, cb] : right.terms_) {
      std::vector<Word> t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      r.add_term(t, ca * cb);
    }
  }
  return r;
}

int TensorElem::parity() const {
  if (terms_.empty()) return 0;
  auto tuple_parity = [&](const std::vector<Word>& t) {
    int p = 0;
    for (const auto& w : t) p ^= word_parity(w, family_);
    return p;
  };
  int p = tuple_parity(terms_.begin()->first);
  for (const auto& [t, c] : terms_)
    if (tuple_parity(t) != p)
      throw UsageError("parity of an inhomogeneous tensor element");
  return p;
}

std::vector<std::vector<int>> TensorElem::max_raise_degrees(int modes) const {
  std::vector<std::vector<int>> m(static_cast<size_t>(arity_),
                                  std::vector<int>(static_cast<size_t>(modes), 0));
  for (const auto& [t, c] : terms_) {
    for (int k = 0; k < arity_; ++k) {
      auto d = raise_degrees(t[static_cast<size_t>(k)], modes);
      for (int i = 0; i < modes; ++i)
        m[static_cast<size_t>(k)][static_cast<size_t>(i)] =
            std::max(m[static_cast<size_t>(k)][static_cast<size_t>(i)],
                     d[static_cast<size_t>(i)]);
    }
  }
  return m;
}

std::string TensorElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.str() << ")*";
    for (size_t k = 0; k < t.size(); ++k) {
      if (k) os << " (x) ";
      os << word_str(t[k]);
    }
    first = false;
  }
  return os.str();
}

TensorElem graded_qcomm(const TensorElem& a, const TensorElem& b, const ScalarQ& lam) {
  if (a.family() != b.family()) throw UsageError("family mismatch in bracket");
  int sign = (a.parity() * b.parity()) % 2;
  ScalarQ coeff = sign ? lam : -lam;
  return a * b + (b * a).scaled(coeff);
}

TensorElem supercomm(const TensorElem& a, const TensorElem& b) {
  return graded_qcomm(a, b, ScalarQ(1));
}

}  // namespace paraq
