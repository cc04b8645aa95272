#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qrec/rational_function.hpp"
#include "qrec/sigma_matrix.hpp"

namespace qrec {

// The ring element q of the commutation rule sigma * t = q * t * sigma must be
// nonzero and not a root of unity; over the rationals that excludes exactly
// 0, 1 and -1.
void require_valid_q(const Rational& q);

// Skew polynomial sum_j c_j(t) sigma^j with the q-commutation rule.
class OrePoly {
 public:
  explicit OrePoly(const Rational& q);
  OrePoly(const Rational& q, std::vector<TPoly> coeffs);

  static OrePoly monomial(const Rational& q, const TPoly& c, int sigma_power);
  static OrePoly constant(const Rational& q, const TPoly& c) { return monomial(q, c, 0); }

  const Rational& q() const { return q_; }

  bool is_zero() const { return c_.empty(); }
  std::optional<int> sigma_degree() const;
  std::optional<int> t_degree() const;

  // Coefficient of sigma^j (zero polynomial outside range).
  const TPoly& coeff(int j) const;

  OrePoly operator-() const;
  OrePoly& operator+=(const OrePoly& o);
  OrePoly& operator-=(const OrePoly& o);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b) { return ore_mul(a, b); }

  // Product under sigma^a t^k = q^{a k} t^k sigma^a.
  friend OrePoly ore_mul(const OrePoly& a, const OrePoly& b);

  friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.q_ == b.q_ && a.c_ == b.c_; }
  friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

  // sum_j c_j(t) f(q^j t).
  RationalFunction apply(const RationalFunction& f) const;

 private:
  void trim();

  Rational q_;
  std::vector<TPoly> c_;
};

// Matrix of skew polynomials sharing one q.
class OreMatrix {
 public:
  OreMatrix(const Rational& q, int rows, int cols);
  static OreMatrix identity(const Rational& q, int n);
  static OreMatrix from_sigma(const SigmaMatrix& m, const Rational& q);

  const Rational& q() const { return q_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  OrePoly& at(int i, int j);
  const OrePoly& at(int i, int j) const;

  bool is_zero() const;
  std::optional<int> sigma_degree() const;
  std::optional<int> t_degree() const;

  friend OreMatrix operator+(const OreMatrix& a, const OreMatrix& b);
  friend OreMatrix operator-(const OreMatrix& a, const OreMatrix& b);
  friend OreMatrix operator*(const OreMatrix& a, const OreMatrix& b);
  friend bool operator==(const OreMatrix& a, const OreMatrix& b);
  friend bool operator!=(const OreMatrix& a, const OreMatrix& b) { return !(a == b); }

  // Entrywise action followed by row sums.
  std::vector<RationalFunction> apply(const std::vector<RationalFunction>& y) const;

  // Writes the matrix as sum_k t^k M_k with M_k over K[x]; index k runs from
  // 0 to the t-degree (a single zero matrix for the zero operator matrix).
  std::vector<SigmaMatrix> t_decompose() const;
  SigmaMatrix t_trailing() const;
  SigmaMatrix t_leading() const;  // requires a nonzero matrix

 private:
  Rational q_;
  int rows_;
  int cols_;
  std::vector<OrePoly> e_;
};

std::vector<RationalFunction> apply_matrix(const OreMatrix& a, const std::vector<RationalFunction>& y);

// System A . y = t^{-nu} b with square A and polynomial b.
struct QRecSystem {
  QRecSystem(OreMatrix a, std::vector<TPoly> rhs, int rhs_t_exponent);

  int dim() const { return A.rows(); }
  const Rational& q() const { return A.q(); }
  int order() const { return A.sigma_degree().value_or(0); }

  // t^{-nu} b as rational functions.
  std::vector<RationalFunction> rhs() const;

  friend bool operator==(const QRecSystem& a, const QRecSystem& b) {
    return a.A == b.A && a.b == b.b && a.nu == b.nu;
  }
  friend bool operator!=(const QRecSystem& a, const QRecSystem& b) { return !(a == b); }

  OreMatrix A;
  std::vector<TPoly> b;
  int nu;
};

}  // namespace qrec
