#pragma once

#include <stdexcept>
#include <vector>

#include "qrec/poly.hpp"

namespace qrec {

// Matrix over the commutative ring K[x] (x standing for the shift).
class SigmaMatrix {
 public:
  SigmaMatrix() : rows_(0), cols_(0) {}
  SigmaMatrix(int rows, int cols);
  static SigmaMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  SigmaPoly& at(int i, int j);
  const SigmaPoly& at(int i, int j) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  std::vector<SigmaPoly> row(int i) const;
  void set_row(int i, const std::vector<SigmaPoly>& r);

  SigmaMatrix top_rows(int n) const;
  SigmaMatrix bottom_rows(int n) const;

  // Entrywise substitution x -> a * x.
  SigmaMatrix twist(const Rational& a) const;

  friend SigmaMatrix operator+(const SigmaMatrix& a, const SigmaMatrix& b);
  friend SigmaMatrix operator-(const SigmaMatrix& a, const SigmaMatrix& b);
  friend SigmaMatrix operator*(const SigmaMatrix& a, const SigmaMatrix& b);
  friend bool operator==(const SigmaMatrix& a, const SigmaMatrix& b);
  friend bool operator!=(const SigmaMatrix& a, const SigmaMatrix& b) { return !(a == b); }

 private:
  int rows_;
  int cols_;
  std::vector<SigmaPoly> e_;
};

std::ostream& operator<<(std::ostream& os, const SigmaMatrix& m);

}  // namespace qrec
