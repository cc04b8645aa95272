#pragma once

#include <vector>

#include "qrec/ore.hpp"
#include "qrec/sigma_matrix.hpp"

namespace qrec {

// Module monomial e_pos * x^degree.  Positions are 0-based.
struct TopTerm {
  int position;
  int degree;

  friend bool operator==(const TopTerm& a, const TopTerm& b) {
    return a.position == b.position && a.degree == b.degree;
  }
};

// Greatest module monomial of a nonzero row under the term-over-position
// ordering: higher x-degree wins, ties go to the smaller position.
TopTerm top_leading_term(const std::vector<SigmaPoly>& row);

struct PopovResult {
  SigmaMatrix P;  // r x m, rows form the reduced Groebner basis of the row module
  SigmaMatrix U;  // m x m unimodular with U * M = [P; 0]
  int rank;
};

// Canonical Popov normal form: monic pivots, distinct pivot columns sorted
// ascending, rows fully reduced against each other, zero rows dropped.
PopovResult popov_form(const SigmaMatrix& m);

bool is_popov(const SigmaMatrix& p);

struct DivisionResult {
  SigmaMatrix X;  // C = X * P + Y
  SigmaMatrix Y;  // no term of any row divisible by a pivot of P
};

// Groebner division of the rows of C by a matrix in Popov form.
DivisionResult reduce_rows(const SigmaMatrix& c, const SigmaMatrix& p);

// Exact determinant over K[x].  Cofactor expansion up to 4 x 4, fraction-free
// Bareiss elimination above.
SigmaPoly sigma_det(const SigmaMatrix& m);

namespace detail {
SigmaPoly sigma_det_cofactor(const SigmaMatrix& m);
SigmaPoly sigma_det_bareiss(const SigmaMatrix& m);
}  // namespace detail

// Left row rank over K(t)[sigma], by eliminating K(t)-dependencies among the
// sigma-leading coefficient vectors.
int ore_row_rank(const OreMatrix& a);

}  // namespace qrec
