#include "qrec/sigma_matrix.hpp"

namespace qrec {

SigmaMatrix::SigmaMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), SigmaPoly());
}

SigmaMatrix SigmaMatrix::identity(int n) {
  SigmaMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = SigmaPoly(1);
  return m;
}

SigmaPoly& SigmaMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::invalid_argument("matrix index out of range");
  return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

const SigmaPoly& SigmaMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::invalid_argument("matrix index out of range");
  return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

bool SigmaMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<SigmaPoly> SigmaMatrix::row(int i) const {
  std::vector<SigmaPoly> r;
  r.reserve(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
  return r;
}

void SigmaMatrix::set_row(int i, const std::vector<SigmaPoly>& r) {
  if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row length mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = r[static_cast<size_t>(j)];
}

SigmaMatrix SigmaMatrix::top_rows(int n) const {
  if (n < 0 || n > rows_) throw std::invalid_argument("row count out of range");
  SigmaMatrix m(n, cols_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  return m;
}

SigmaMatrix SigmaMatrix::bottom_rows(int n) const {
  if (n < 0 || n > rows_) throw std::invalid_argument("row count out of range");
  SigmaMatrix m(n, cols_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(rows_ - n + i, j);
  return m;
}

SigmaMatrix SigmaMatrix::twist(const Rational& a) const {
  SigmaMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).scale_arg(a);
  return m;
}

SigmaMatrix operator+(const SigmaMatrix& a, const SigmaMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  SigmaMatrix m(a.rows_, a.cols_);
  for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
  return m;
}

SigmaMatrix operator-(const SigmaMatrix& a, const SigmaMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  SigmaMatrix m(a.rows_, a.cols_);
  for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] = a.e_[k] - b.e_[k];
  return m;
}

SigmaMatrix operator*(const SigmaMatrix& a, const SigmaMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  SigmaMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const SigmaPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

bool operator==(const SigmaMatrix& a, const SigmaMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::ostream& operator<<(std::ostream& os, const SigmaMatrix& m) {
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.at(i, j);
  }
  return os << "]";
}

}  // namespace qrec
