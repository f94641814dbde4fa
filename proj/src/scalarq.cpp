#include "scalarq.hpp"

#include <boost/multiprecision/integer.hpp>
#include <sstream>
#include <utility>

namespace paraq {

namespace {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_rem(Poly a, const Poly& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const Int la = a.leading();
    Poly scaled = a * Poly(b.leading()) - Poly::monomial(la, shift) * b;
    a = std::move(scaled);
  }
  return a;
}

}  // namespace

Poly Poly::monomial(Int c, int deg) {
  Poly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(deg) + 1, Int(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), Int(0));
  for (size_t k = 0; k < b.c_.size(); ++k) r.c_[k] += b.c_[k];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), Int(0));
  for (size_t k = 0; k < b.c_.size(); ++k) r.c_[k] -= b.c_[k];
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : Poly();
  Poly r;
  r.c_.assign(c_.size() + static_cast<size_t>(k), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
  return r;
}

Int Poly::content() const {
  Int g = 0;
  for (const auto& c : c_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  Int g = content();
  Poly r = *this;
  if (g != 1) {
    for (auto& c : r.c_) c /= g;
  }
  return r;
}

Poly Poly::divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return Poly();
  Poly rem = a;
  Poly quot;
  quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    Int q = rem.leading() / b.leading();
    if (q * b.leading() != rem.leading())
      throw DomainError("inexact polynomial division");
    quot.c_[static_cast<size_t>(shift)] = q;
    rem = rem - Poly::monomial(std::move(q), shift) * b;
  }
  if (!rem.is_zero()) throw DomainError("inexact polynomial division");
  quot.trim();
  return quot;
}

// Primitive PRS; returns content-gcd times the primitive gcd, with the
// leading coefficient made positive.
Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero() || b.is_zero()) {
    Poly r = (a.is_zero() ? b : a);
    if (r.leading() < 0) r = -r;
    return r;
  }
  Int cg = int_gcd(a.content(), b.content());
  Poly x = a.primitive_part();
  Poly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = pseudo_rem(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  if (x.leading() < 0) x = -x;
  return Poly(std::move(cg)) * x;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t k = c_.size(); k-- > 0;) {
    acc = acc * x + Rational(c_[k]);
  }
  return acc;
}

ScalarQ::ScalarQ(const Rational& v)
    : num_(numerator(v)), den_(denominator(v)) {
  normalize();
}

ScalarQ::ScalarQ(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  normalize();
}

namespace {

// Index of the lowest nonzero coefficient.
int low_order(const Poly& p) {
  for (int k = 0;; ++k)
    if (p.coeff(k) != 0) return k;
}

bool is_monomial(const Poly& p) {
  return !p.is_zero() && low_order(p) == p.degree();
}

}  // namespace

void ScalarQ::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() == 0 && den_.leading() == 1) return;
  // Monomial denominators (the common case for Laurent entries) reduce by
  // a valuation shift and an integer content gcd; no polynomial gcd runs.
  if (is_monomial(den_)) {
    const int shift = std::min(low_order(num_), den_.degree());
    if (shift > 0) {
      Poly sm = Poly::monomial(1, shift);
      num_ = Poly::divide_exact(num_, sm);
      den_ = Poly::divide_exact(den_, sm);
    }
    Int g = int_gcd(num_.content(), den_.content());
    if (g > 1) {
      num_ = Poly::divide_exact(num_, Poly(g));
      den_ = Poly::divide_exact(den_, Poly(g));
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0 || g.leading() != 1) {
    num_ = Poly::divide_exact(num_, g);
    den_ = Poly::divide_exact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

ScalarQ ScalarQ::spow(int k) {
  ScalarQ r;
  if (k >= 0) {
    r.num_ = Poly::monomial(1, k);
    r.den_ = Poly(1);
  } else {
    r.num_ = Poly(1);
    r.den_ = Poly::monomial(1, -k);
  }
  return r;
}

ScalarQ ScalarQ::qint(long n) {
  if (n == 0) return ScalarQ();
  return (spow(static_cast<int>(n)) - spow(static_cast<int>(-n))) /
         (spow(1) - spow(-1));
}

ScalarQ ScalarQ::omega() { return spow(1) - spow(-1); }

ScalarQ ScalarQ::cconst() { return spow(-1) * (spow(2) - spow(-2)); }

ScalarQ ScalarQ::operator-() const {
  ScalarQ r = *this;
  r.num_ = -r.num_;
  return r;
}

ScalarQ& ScalarQ::operator+=(const ScalarQ& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ScalarQ& ScalarQ::operator-=(const ScalarQ& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ScalarQ& ScalarQ::operator*=(const ScalarQ& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ScalarQ operator*(const ScalarQ& a, const ScalarQ& b) {
  ScalarQ r = a;
  r *= b;
  return r;
}

ScalarQ ScalarQ::inverse() const {
  if (is_zero()) throw DomainError("inversion of zero");
  ScalarQ r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

ScalarQ ScalarQ::bar() const {
  // p(1/s) = s^{-deg p} * reverse(p); the two s-powers combine into one
  // monomial on whichever side needs it.
  auto reversed = [](const Poly& p) {
    Poly r;
    r.c_.assign(p.c_.rbegin(), p.c_.rend());
    r.trim();
    return r;
  };
  if (is_zero()) return ScalarQ();
  const int dn = num_.degree();
  const int dd = den_.degree();
  Poly n = reversed(num_);
  Poly d = reversed(den_);
  if (dd >= dn)
    n = n.shifted(dd - dn);
  else
    d = d.shifted(dn - dd);
  return ScalarQ(std::move(n), std::move(d));
}

Rational ScalarQ::eval_at(const Rational& s0) const {
  Rational d = den_.eval(s0);
  if (d == 0) throw EvalError("pole at substitution point");
  return num_.eval(s0) / d;
}

namespace {

// One Laurent term c * q^{e/2} (e is the exponent of s).
std::string render_term(const Rational& c, int e, bool leading) {
  std::string sign;
  Rational mag = c;
  if (c < 0) {
    sign = leading ? "-" : " - ";
    mag = -c;
  } else if (!leading) {
    sign = " + ";
  }
  std::string base;
  if (e != 0) {
    if (e == 2)
      base = "q";
    else if (e == -2)
      base = "q^-1";
    else if (e % 2 == 0)
      base = "q^" + std::to_string(e / 2);
    else
      base = "q^(" + std::to_string(e) + "/2)";
  }
  std::ostringstream os;
  os << sign;
  if (base.empty()) {
    os << mag;
  } else if (mag == 1) {
    os << base;
  } else {
    os << mag << "*" << base;
  }
  return os.str();
}

std::string render_laurent(const Poly& num, const Int& dc, int shift) {
  // num / (dc * s^shift) as a sum of Laurent terms, highest power first.
  std::string out;
  bool leading = true;
  for (int k = num.degree(); k >= 0; --k) {
    Int a = num.coeff(k);
    if (a == 0) continue;
    out += render_term(Rational(a) / Rational(dc), k - shift, leading);
    leading = false;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string ScalarQ::str() const {
  if (is_zero()) return "0";
  // Monomial denominator: render as a genuine Laurent expression.
  bool mono = true;
  for (int k = 0; k < den_.degree(); ++k)
    if (den_.coeff(k) != 0) mono = false;
  if (mono) return render_laurent(num_, den_.leading(), den_.degree());
  return "(" + render_laurent(num_, 1, 0) + ")/(" +
         render_laurent(den_, 1, 0) + ")";
}

}  // namespace paraq
