#pragma once

#include <optional>
#include <vector>

#include "qrec/ore.hpp"
#include "qrec/popov.hpp"

namespace qrec {

enum class BoundKind { Denominator, Degree };

struct BoundReport {
  BoundKind kind;
  SigmaPoly det_poly;                   // lambda or rho
  std::vector<int> candidates;          // exponents n with det_poly(q^{-n}) = 0 resp. q^{n}
  std::optional<int> structural_bound;  // nu (denominator) or kappa - nu - l (degree; absent for b = 0)
  std::optional<int> bound;             // absent means: no nonzero polynomial solution (degree kind)
};

// det of the t-trailing matrix, as a polynomial in x.
SigmaPoly lambda_poly(const QRecSystem& sys);

// det of the t-leading matrix.
SigmaPoly rho_poly(const QRecSystem& sys);

enum class RootSign { Positive, Negative };

// All n >= 0 with p(q^{n}) = 0 (Positive) or p(q^{-n}) = 0 (Negative); exact.
std::vector<int> q_power_roots(const SigmaPoly& p, const Rational& q, RootSign direction);

// Upper bound for the t-power in the denominator of any rational solution.
// Requires lambda != 0 (throws InfeasibleError otherwise).
BoundReport denominator_t_bound(const QRecSystem& sys);

// Upper bound for the degree of polynomial solutions, or the "no nonzero
// solution" marker.  Requires rho != 0 (throws InfeasibleError otherwise).
BoundReport degree_bound(const QRecSystem& sys);

}  // namespace qrec
