#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "qrec/poly.hpp"

namespace qrec {

// Quotient of two polynomials in t, kept fully reduced with a monic
// denominator.  Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(TPoly(1)) {}
  RationalFunction(const TPoly& p) : num_(p), den_(TPoly(1)) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(TPoly(c)), den_(TPoly(1)) {}  // NOLINT
  RationalFunction(long c) : num_(TPoly(c)), den_(TPoly(1)) {}  // NOLINT

  RationalFunction(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    normalize();
  }

  // t^e for any integer e.
  static RationalFunction t_power(int e) {
    if (e >= 0) return RationalFunction(TPoly::monomial(Rational(1), e));
    return RationalFunction(TPoly(1), TPoly::monomial(Rational(1), -e));
  }

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == TPoly(1); }

  RationalFunction operator-() const { return RationalFunction(unchecked{}, -num_, den_); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::invalid_argument("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  Rational eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw std::invalid_argument("evaluation at a pole");
    return num_.eval(x) / d;
  }

  // f(q t), normalized.
  RationalFunction subs_qt(const Rational& q) const {
    return RationalFunction(num_.scale_arg(q), den_.scale_arg(q));
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    const auto wrap = [](const TPoly& p) {
      std::string s = p.to_string();
      const bool simple = p.degree() && (*p.degree() == 0 || s.find(' ') == std::string::npos);
      return simple ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  struct unchecked {};
  RationalFunction(unchecked, TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = TPoly(1);
      return;
    }
    const TPoly g = poly_gcd(num_, den_);
    if (!g.is_zero() && g != TPoly(1)) {
      num_ = poly_divmod(num_, g).quotient;
      den_ = poly_divmod(den_, g).quotient;
    }
    const Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
      num_ = num_ / lc;
      den_ = den_ / lc;
    }
  }

  TPoly num_;
  TPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.to_string();
}

// f(q t) for f in K(t); the action of the q-shift.
inline RationalFunction substitute_qt(const RationalFunction& f, const Rational& q) {
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  return f.subs_qt(q);
}

}  // namespace qrec
