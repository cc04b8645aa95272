#pragma once

#include <vector>

#include "qrec/rational.hpp"

namespace qrec {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

struct LinearSolution {
  bool consistent = false;
  QVector particular;            // one solution when consistent
  std::vector<QVector> kernel;   // basis of the homogeneous solution space
};

// Exact Gaussian elimination over the rationals for A x = rhs.
LinearSolution solve_linear(const QMatrix& a, const QVector& rhs);

int matrix_rank(QMatrix a);

}  // namespace qrec
