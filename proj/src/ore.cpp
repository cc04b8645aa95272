#include "qrec/ore.hpp"

#include <algorithm>

namespace qrec {

void require_valid_q(const Rational& q) {
  if (q.is_zero() || q == Rational(1) || q == Rational(-1))
    throw std::invalid_argument("q must be nonzero and not a root of unity");
}

OrePoly::OrePoly(const Rational& q) : q_(q) { require_valid_q(q); }

OrePoly::OrePoly(const Rational& q, std::vector<TPoly> coeffs) : q_(q), c_(std::move(coeffs)) {
  require_valid_q(q);
  trim();
}

OrePoly OrePoly::monomial(const Rational& q, const TPoly& c, int sigma_power) {
  if (sigma_power < 0) throw std::invalid_argument("negative sigma power");
  OrePoly p(q);
  if (!c.is_zero()) {
    p.c_.assign(static_cast<size_t>(sigma_power) + 1, TPoly());
    p.c_.back() = c;
  }
  return p;
}

std::optional<int> OrePoly::sigma_degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

std::optional<int> OrePoly::t_degree() const {
  std::optional<int> d;
  for (const auto& c : c_)
    if (auto dc = c.degree(); dc && (!d || *dc > *d)) d = dc;
  return d;
}

const TPoly& OrePoly::coeff(int j) const {
  static const TPoly zero;
  if (j < 0 || static_cast<size_t>(j) >= c_.size()) return zero;
  return c_[static_cast<size_t>(j)];
}

OrePoly OrePoly::operator-() const {
  OrePoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

OrePoly& OrePoly::operator+=(const OrePoly& o) {
  if (q_ != o.q_) throw std::invalid_argument("mismatched q");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), TPoly());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) {
  if (q_ != o.q_) throw std::invalid_argument("mismatched q");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), TPoly());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

OrePoly ore_mul(const OrePoly& a, const OrePoly& b) {
  if (a.q_ != b.q_) throw std::invalid_argument("mismatched q");
  OrePoly r(a.q_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, TPoly());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    // sigma^i moves across b_j(t): picks up b_j(q^i t).
    const Rational qi = a.q_.pow(static_cast<long>(i));
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j].scale_arg(qi);
    }
  }
  r.trim();
  return r;
}

RationalFunction OrePoly::apply(const RationalFunction& f) const {
  RationalFunction acc;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    acc += RationalFunction(c_[j]) * f.subs_qt(q_.pow(static_cast<long>(j)));
  }
  return acc;
}

void OrePoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OreMatrix::OreMatrix(const Rational& q, int rows, int cols) : q_(q), rows_(rows), cols_(cols) {
  require_valid_q(q);
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), OrePoly(q));
}

OreMatrix OreMatrix::identity(const Rational& q, int n) {
  OreMatrix m(q, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = OrePoly::constant(q, TPoly(1));
  return m;
}

OreMatrix OreMatrix::from_sigma(const SigmaMatrix& s, const Rational& q) {
  OreMatrix m(q, s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) {
      const SigmaPoly& p = s.at(i, j);
      std::vector<TPoly> coeffs;
      if (auto d = p.degree()) {
        coeffs.reserve(static_cast<size_t>(*d) + 1);
        for (int k = 0; k <= *d; ++k) coeffs.emplace_back(p.coeff(k));
      }
      m.at(i, j) = OrePoly(q, std::move(coeffs));
    }
  return m;
}

OrePoly& OreMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::invalid_argument("matrix index out of range");
  return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

const OrePoly& OreMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::invalid_argument("matrix index out of range");
  return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

bool OreMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const OrePoly& p) { return p.is_zero(); });
}

std::optional<int> OreMatrix::sigma_degree() const {
  std::optional<int> d;
  for (const auto& p : e_)
    if (auto dp = p.sigma_degree(); dp && (!d || *dp > *d)) d = dp;
  return d;
}

std::optional<int> OreMatrix::t_degree() const {
  std::optional<int> d;
  for (const auto& p : e_)
    if (auto dp = p.t_degree(); dp && (!d || *dp > *d)) d = dp;
  return d;
}

OreMatrix operator+(const OreMatrix& a, const OreMatrix& b) {
  if (a.q_ != b.q_) throw std::invalid_argument("mismatched q");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  OreMatrix m = a;
  for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] += b.e_[k];
  return m;
}

OreMatrix operator-(const OreMatrix& a, const OreMatrix& b) {
  if (a.q_ != b.q_) throw std::invalid_argument("mismatched q");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  OreMatrix m = a;
  for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] -= b.e_[k];
  return m;
}

OreMatrix operator*(const OreMatrix& a, const OreMatrix& b) {
  if (a.q_ != b.q_) throw std::invalid_argument("mismatched q");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  OreMatrix m(a.q_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const OrePoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += ore_mul(aik, b.at(k, j));
    }
  return m;
}

bool operator==(const OreMatrix& a, const OreMatrix& b) {
  return a.q_ == b.q_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::vector<RationalFunction> OreMatrix::apply(const std::vector<RationalFunction>& y) const {
  if (static_cast<int>(y.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<RationalFunction> out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const OrePoly& p = at(i, j);
      if (!p.is_zero()) out[static_cast<size_t>(i)] += p.apply(y[static_cast<size_t>(j)]);
    }
  return out;
}

std::vector<SigmaMatrix> OreMatrix::t_decompose() const {
  const int ell = t_degree().value_or(0);
  std::vector<SigmaMatrix> parts(static_cast<size_t>(ell) + 1, SigmaMatrix(rows_, cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const OrePoly& p = at(i, j);
      const int sdeg = p.sigma_degree().value_or(-1);
      for (int a = 0; a <= sdeg; ++a) {
        const TPoly& c = p.coeff(a);
        if (auto d = c.degree()) {
          for (int k = 0; k <= *d; ++k)
            if (!c.coeff(k).is_zero())
              parts[static_cast<size_t>(k)].at(i, j) += SigmaPoly::monomial(c.coeff(k), a);
        }
      }
    }
  return parts;
}

SigmaMatrix OreMatrix::t_trailing() const {
  SigmaMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const OrePoly& p = at(i, j);
      const int sdeg = p.sigma_degree().value_or(-1);
      for (int a = 0; a <= sdeg; ++a) {
        const Rational& c0 = p.coeff(a).coeff(0);
        if (!c0.is_zero()) m.at(i, j) += SigmaPoly::monomial(c0, a);
      }
    }
  return m;
}

SigmaMatrix OreMatrix::t_leading() const {
  const auto ell = t_degree();
  if (!ell) throw std::invalid_argument("t-leading matrix of the zero matrix");
  SigmaMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const OrePoly& p = at(i, j);
      const int sdeg = p.sigma_degree().value_or(-1);
      for (int a = 0; a <= sdeg; ++a) {
        const Rational& c = p.coeff(a).coeff(*ell);
        if (!c.is_zero()) m.at(i, j) += SigmaPoly::monomial(c, a);
      }
    }
  return m;
}

std::vector<RationalFunction> apply_matrix(const OreMatrix& a, const std::vector<RationalFunction>& y) {
  return a.apply(y);
}

QRecSystem::QRecSystem(OreMatrix a, std::vector<TPoly> rhs, int rhs_t_exponent)
    : A(std::move(a)), b(std::move(rhs)), nu(rhs_t_exponent) {
  if (A.rows() != A.cols()) throw std::invalid_argument("system matrix must be square");
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("right hand side length mismatch");
  if (nu < 0) throw std::invalid_argument("negative right hand side t-exponent");
}

std::vector<RationalFunction> QRecSystem::rhs() const {
  std::vector<RationalFunction> out;
  out.reserve(b.size());
  const TPoly tnu = TPoly::monomial(Rational(1), nu);
  for (const auto& p : b) out.emplace_back(p, tnu);
  return out;
}

}  // namespace qrec
