#include "qrec/bounds.hpp"

#include <algorithm>

#include "qrec/errors.hpp"

namespace qrec {

SigmaPoly lambda_poly(const QRecSystem& sys) { return sigma_det(sys.A.t_trailing()); }

SigmaPoly rho_poly(const QRecSystem& sys) {
  if (sys.A.is_zero()) return SigmaPoly();
  return sigma_det(sys.A.t_leading());
}

std::vector<int> q_power_roots(const SigmaPoly& p, const Rational& q, RootSign direction) {
  if (p.is_zero()) throw std::invalid_argument("q-power root search on the zero polynomial; regularize first");
  require_valid_q(q);

  // x-power factors contribute no roots of the form q^{+-n}.
  const auto [shift, core] = power_split(p);
  (void)shift;

  // Clear denominators and the content to get primitive integer coefficients.
  mpz_class den_lcm = 1;
  for (const Rational& c : core.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ic;
  ic.reserve(core.coeffs().size());
  mpz_class content = 0;
  for (const Rational& c : core.coeffs()) {
    mpz_class v = c.num() * (den_lcm / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ic.push_back(std::move(v));
  }
  for (auto& v : ic) v /= content;

  // A root q^{+-n} = a^n/b^n in lowest terms forces b^n | c_0 and a^n | c_d
  // (or the mirror image), so n <= log2(max(|c_0|, |c_d|)).
  const mpz_class bound_src = std::max(abs(ic.front()), abs(ic.back()));
  const int n_max = static_cast<int>(mpz_sizeinbase(bound_src.get_mpz_t(), 2)) - 1;

  std::vector<int> roots;
  for (int n = 0; n <= n_max; ++n) {
    const Rational point = q.pow(direction == RootSign::Negative ? -static_cast<long>(n) : static_cast<long>(n));
    if (core.eval(point).is_zero()) roots.push_back(n);
  }
  return roots;
}

BoundReport denominator_t_bound(const QRecSystem& sys) {
  SigmaPoly lam = lambda_poly(sys);
  if (lam.is_zero()) throw InfeasibleError("t-tail singular; regularize first");
  BoundReport rep{BoundKind::Denominator, lam, q_power_roots(lam, sys.q(), RootSign::Negative), sys.nu,
                  std::nullopt};
  int best = std::max(0, sys.nu);
  for (int n : rep.candidates) best = std::max(best, n);
  rep.bound = best;
  return rep;
}

BoundReport degree_bound(const QRecSystem& sys) {
  SigmaPoly rho = rho_poly(sys);
  if (rho.is_zero()) throw InfeasibleError("t-head singular; regularize first");
  BoundReport rep{BoundKind::Degree, rho, {}, std::nullopt, std::nullopt};

  const bool b_zero = std::all_of(sys.b.begin(), sys.b.end(), [](const TPoly& p) { return p.is_zero(); });
  if (!b_zero && sys.nu > 0) {
    for (const TPoly& p : sys.b)
      if (!p.is_zero() && p.trailing_order() < sys.nu) return rep;  // negative t-powers on the right: no polynomial solution
  }

  rep.candidates = q_power_roots(rho, sys.q(), RootSign::Positive);
  if (!b_zero) {
    int kappa = 0;
    for (const TPoly& p : sys.b)
      if (auto d = p.degree()) kappa = std::max(kappa, *d);
    rep.structural_bound = kappa - sys.nu - sys.A.t_degree().value_or(0);
  }

  std::optional<int> best = rep.structural_bound;
  for (int n : rep.candidates) best = std::max(best.value_or(n), n);
  if (best && *best >= 0) rep.bound = best;
  return rep;
}

}  // namespace qrec
