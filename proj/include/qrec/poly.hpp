#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrec/rational.hpp"

namespace qrec {

// Dense univariate polynomial over the rationals.  The tag distinguishes the
// two variables used throughout (t for coefficients, x standing for the shift
// in trailing/leading matrices) so that they cannot be mixed up by accident.
// Coefficients are stored in ascending order with no trailing zeros; the zero
// polynomial is the empty sequence and its degree is "absent" rather than a
// plain integer.
template <class Tag>
class BasicPoly {
 public:
  BasicPoly() = default;
  BasicPoly(const Rational& c) {  // NOLINT: implicit by design
    if (!c.is_zero()) c_.push_back(c);
  }
  BasicPoly(long c) : BasicPoly(Rational(c)) {}  // NOLINT

  static BasicPoly from_coeffs(std::vector<Rational> ascending) {
    BasicPoly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
  }

  static BasicPoly monomial(const Rational& c, int power) {
    if (power < 0) throw std::invalid_argument("negative monomial power");
    BasicPoly p;
    if (!c.is_zero()) {
      p.c_.assign(static_cast<size_t>(power) + 1, Rational(0));
      p.c_.back() = c;
    }
    return p;
  }

  static BasicPoly variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }

  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  const Rational& coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return zero;
    return c_[static_cast<size_t>(k)];
  }

  const Rational& leading_coeff() const {
    if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
  }

  // Smallest k with a nonzero coefficient.
  int trailing_order() const {
    if (c_.empty()) throw std::invalid_argument("trailing order of zero polynomial");
    int k = 0;
    while (c_[static_cast<size_t>(k)].is_zero()) ++k;
    return k;
  }

  const std::vector<Rational>& coeffs() const { return c_; }

  BasicPoly operator-() const {
    BasicPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return BasicPoly();
    BasicPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  friend BasicPoly operator*(const Rational& c, BasicPoly p) {
    for (auto& x : p.c_) x *= c;
    p.trim();
    return p;
  }
  friend BasicPoly operator*(BasicPoly p, const Rational& c) { return c * std::move(p); }

  BasicPoly operator/(const Rational& c) const {
    if (c.is_zero()) throw std::invalid_argument("polynomial division by zero scalar");
    return c.inverse() * *this;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // p(a * var): coefficient k picks up a^k.
  BasicPoly scale_arg(const Rational& a) const {
    BasicPoly r = *this;
    Rational f(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
      r.c_[i] *= f;
      f *= a;
    }
    r.trim();
    return r;
  }

  // p * var^k.
  BasicPoly times_power(int k) const {
    if (k < 0) throw std::invalid_argument("negative power shift");
    if (is_zero() || k == 0) return *this;
    BasicPoly r;
    r.c_.assign(static_cast<size_t>(k), Rational(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  // Exact division by var^k; throws when some low-order coefficient is nonzero.
  BasicPoly divided_by_power(int k) const {
    if (k < 0) throw std::invalid_argument("negative power shift");
    if (is_zero() || k == 0) return *this;
    if (static_cast<size_t>(k) > c_.size()) throw std::invalid_argument("polynomial not divisible by requested power");
    for (int i = 0; i < k; ++i)
      if (!c_[static_cast<size_t>(i)].is_zero())
        throw std::invalid_argument("polynomial not divisible by requested power");
    BasicPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
  }

  BasicPoly monic() const { return *this / leading_coeff(); }

  // Canonical form: descending powers, explicit signs, no '*'.
  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

struct TVarTag {};
struct SigmaVarTag {};

template <class Tag>
struct PolyVarName;
template <>
struct PolyVarName<TVarTag> {
  static constexpr char value = 't';
};
template <>
struct PolyVarName<SigmaVarTag> {
  static constexpr char value = 'x';
};

using TPoly = BasicPoly<TVarTag>;
using SigmaPoly = BasicPoly<SigmaVarTag>;

template <class Tag>
std::string BasicPoly<Tag>::to_string() const {
  if (is_zero()) return "0";
  const char var = PolyVarName<Tag>::value;
  std::string out;
  for (int k = *degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = c.abs();
    if (k == 0) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str();
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

template <class Tag>
std::ostream& operator<<(std::ostream& os, const BasicPoly<Tag>& p) {
  return os << p.to_string();
}

template <class Tag>
struct DivModResult {
  BasicPoly<Tag> quotient;
  BasicPoly<Tag> remainder;
};

// a = quotient * d + remainder with deg remainder < deg d.
template <class Tag>
DivModResult<Tag> poly_divmod(const BasicPoly<Tag>& a, const BasicPoly<Tag>& d) {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  BasicPoly<Tag> q;
  BasicPoly<Tag> r = a;
  const int dd = *d.degree();
  const Rational& lc = d.leading_coeff();
  while (!r.is_zero() && *r.degree() >= dd) {
    const int k = *r.degree() - dd;
    const Rational c = r.leading_coeff() / lc;
    const auto mono = BasicPoly<Tag>::monomial(c, k);
    q += mono;
    r -= mono * d;
  }
  return {q, r};
}

// f = var^k * g with g(0) != 0.
template <class Tag>
std::pair<int, BasicPoly<Tag>> power_split(const BasicPoly<Tag>& f) {
  if (f.is_zero()) throw std::invalid_argument("power split of zero polynomial");
  const int k = f.trailing_order();
  return {k, f.divided_by_power(k)};
}

// Monic gcd; gcd(0, 0) = 0.
template <class Tag>
BasicPoly<Tag> poly_gcd(BasicPoly<Tag> a, BasicPoly<Tag> b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

}  // namespace qrec
