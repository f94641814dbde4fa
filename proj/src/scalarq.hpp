#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace paraq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Inversion of zero, division by zero.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Substitution at a pole.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition (family mismatch, inhomogeneous parity, ...).
struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

// Dense polynomial in one variable with arbitrary-precision integer
// coefficients. Stored low degree first; the top coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(long c) : Poly(Int(c)) {}
  explicit Poly(Int c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  static Poly monomial(Int c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Int(0);
  }
  const Int& leading() const { return c_.back(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;

  Poly shifted(int k) const;  // multiply by s^k, k >= 0

  Int content() const;  // gcd of coefficients, nonnegative
  Poly primitive_part() const;
  static Poly divide_exact(const Poly& a, const Poly& b);
  static Poly gcd(const Poly& a, const Poly& b);  // positive leading coeff

  Rational eval(const Rational& x) const;

 private:
  std::vector<Int> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  friend class ScalarQ;
};

// Element of Q(s), s = q^(1/2): the coefficient field for everything.
//
// Canonical form: numerator and denominator share no polynomial factor,
// their integer contents are coprime, and the denominator has a positive
// leading coefficient. Equality is therefore plain representational
// comparison. Values are immutable in spirit: every operation returns a
// fresh normalized value, so sharing across threads is safe.
class ScalarQ {
 public:
  ScalarQ() : den_(1) {}
  ScalarQ(long v) : num_(v), den_(1) {}
  ScalarQ(Int v) : num_(std::move(v)), den_(1) {}
  ScalarQ(const Rational& v);
  ScalarQ(Poly num, Poly den);

  // s^k for any integer k (q^{k/2}).
  static ScalarQ spow(int k);
  // Quantum integer [n] = (s^n - s^-n) / (s - s^-1).
  static ScalarQ qint(long n);
  // omega = s - s^-1
  static ScalarQ omega();
  // c = q^{-1/2} (q - q^{-1})
  static ScalarQ cconst();

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool operator==(const ScalarQ& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ScalarQ& o) const { return !(*this == o); }

  ScalarQ operator-() const;
  ScalarQ& operator+=(const ScalarQ& o);
  ScalarQ& operator-=(const ScalarQ& o);
  ScalarQ& operator*=(const ScalarQ& o);
  friend ScalarQ operator+(ScalarQ a, const ScalarQ& b) { return a += b; }
  friend ScalarQ operator-(ScalarQ a, const ScalarQ& b) { return a -= b; }
  friend ScalarQ operator*(const ScalarQ& a, const ScalarQ& b);
  friend ScalarQ operator/(const ScalarQ& a, const ScalarQ& b) {
    return a * b.inverse();
  }

  ScalarQ inverse() const;  // throws DomainError on zero
  ScalarQ bar() const;      // the involution s -> s^-1 (q -> q^-1)
  Rational eval_at(const Rational& s0) const;  // throws EvalError at a pole

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  // Laurent rendering in powers of q: "q + 1 + q^-1", half powers as
  // "q^(3/2)". Falls back to "(num)/(den)" when the denominator is not a
  // monomial.
  std::string str() const;

 private:
  Poly num_, den_;
  void normalize();
};

}  // namespace paraq
