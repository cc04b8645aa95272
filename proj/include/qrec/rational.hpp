#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qrec {

// Exact rational number over arbitrary-precision integers.  Always kept
// canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
  }

  explicit Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with an optional leading minus sign.
  static Rational from_string(const std::string& text) {
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0)
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    if (v.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
      if (e < 0) throw std::invalid_argument("negative power of zero");
      return Rational(0);
    }
    const Rational base = e < 0 ? inverse() : *this;
    const unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(std::move(n), std::move(d));
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

}  // namespace qrec
