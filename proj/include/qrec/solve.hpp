#pragma once

#include <optional>
#include <vector>

#include "qrec/bounds.hpp"
#include "qrec/linalg.hpp"
#include "qrec/ore.hpp"
#include "qrec/regularize.hpp"

namespace qrec {

struct SolutionSet {
  // Absent when the system is homogeneous or has no solution of the
  // requested shape.
  std::optional<std::vector<RationalFunction>> particular;
  std::vector<std::vector<RationalFunction>> homogeneous_basis;
  int denominator_exponent = 0;  // the t-power exponent n* used for the substitution
};

// Linear system over the rationals obtained by comparing t-coefficients of
// the degree-N polynomial ansatz.  Unknown (i, k) is coefficient k of
// component i, laid out as column i * (N + 1) + k.
struct AnsatzSystem {
  int dim = 0;
  int max_degree = 0;
  QMatrix lhs;
  QVector rhs;
  bool rhs_compatible = true;  // t^nu divides b
};

AnsatzSystem build_ansatz(const QRecSystem& sys, int max_degree);

// All polynomial solutions of degree <= max_degree: a particular solution
// (when the system is inhomogeneous and solvable) plus a basis of the
// homogeneous polynomial solutions.
SolutionSet polynomial_solutions(const QRecSystem& sys, int max_degree);

// The substitution y = t^{-n} z, normalized back to the t^{-nu} b shape.
QRecSystem substitute_t_power(const QRecSystem& sys, int n);

// The substitution y = z / (t^n d) for a user-supplied denominator part d
// with d(0) != 0; coefficients stay polynomial.
QRecSystem substitute_denominator(const QRecSystem& sys, int n, const TPoly& d);

// Intermediate results of the solving pipeline, for reporting.
struct RationalSolvePipeline {
  std::optional<BoundReport> denominator_report;
  std::optional<BoundReport> degree_report;
};

// Full pipeline: tail-regularize, bound the denominator t-power, substitute,
// head-regularize, bound the degree, solve the ansatz, map back and verify.
// Finds all solutions whose denominator is a power of t (times the optional
// aperiodic part).
SolutionSet rational_t_solutions(const QRecSystem& sys, const TPoly& aperiodic_denominator = TPoly(1),
                                 RationalSolvePipeline* pipeline = nullptr);

// Exact check of A . y = t^{-nu} b.
bool verify_solution(const QRecSystem& sys, const std::vector<RationalFunction>& y);

}  // namespace qrec
