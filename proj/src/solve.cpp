#include "qrec/solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrec/errors.hpp"

namespace qrec {

namespace {

bool all_zero(const std::vector<TPoly>& v) {
  return std::all_of(v.begin(), v.end(), [](const TPoly& p) { return p.is_zero(); });
}

OrePoly scale_sigma_coeffs(const OrePoly& p, const Rational& q, const std::vector<Rational>& factor,
                           const std::vector<TPoly>& poly_factor) {
  const int sd = p.sigma_degree().value_or(-1);
  std::vector<TPoly> cs;
  cs.reserve(static_cast<size_t>(sd + 1));
  for (int j = 0; j <= sd; ++j) {
    TPoly c = factor[static_cast<size_t>(j)] * p.coeff(j);
    if (!poly_factor.empty()) c *= poly_factor[static_cast<size_t>(j)];
    cs.push_back(std::move(c));
  }
  return OrePoly(q, std::move(cs));
}

}  // namespace

AnsatzSystem build_ansatz(const QRecSystem& sys, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative ansatz degree");
  const int m = sys.dim();
  const int n = max_degree;
  const int ell = sys.A.t_degree().value_or(0);
  const Rational& q = sys.q();

  AnsatzSystem ans;
  ans.dim = m;
  ans.max_degree = n;

  // Reduce the right hand side to a polynomial; rows where t^nu does not
  // divide b make the inhomogeneous problem unsolvable in polynomials.
  std::vector<TPoly> reduced(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    const TPoly& bi = sys.b[static_cast<size_t>(i)];
    if (bi.is_zero()) continue;
    if (bi.trailing_order() >= sys.nu)
      reduced[static_cast<size_t>(i)] = bi.divided_by_power(sys.nu);
    else
      ans.rhs_compatible = false;
  }

  int rows_deg = ell + n;
  if (ans.rhs_compatible)
    for (const TPoly& p : reduced)
      if (auto d = p.degree()) rows_deg = std::max(rows_deg, *d);

  const int n_eq = m * (rows_deg + 1);
  const int n_unknown = m * (n + 1);
  ans.lhs.assign(static_cast<size_t>(n_eq), QVector(static_cast<size_t>(n_unknown), Rational(0)));
  ans.rhs.assign(static_cast<size_t>(n_eq), Rational(0));

  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) {
      const int col = i * (n + 1) + k;
      for (int r = 0; r < m; ++r) {
        // Coefficients of A(r, i) applied to e_i t^k: (sum_j q^{j k} A_j(t)) t^k.
        const OrePoly& entry = sys.A.at(r, i);
        TPoly contrib;
        const int sd = entry.sigma_degree().value_or(-1);
        for (int j = 0; j <= sd; ++j) contrib += q.pow(static_cast<long>(j) * k) * entry.coeff(j);
        contrib = contrib.times_power(k);
        if (auto d = contrib.degree())
          for (int p = 0; p <= *d; ++p)
            ans.lhs[static_cast<size_t>(r * (rows_deg + 1) + p)][static_cast<size_t>(col)] = contrib.coeff(p);
      }
    }

  if (ans.rhs_compatible)
    for (int r = 0; r < m; ++r)
      for (int p = 0; p <= rows_deg; ++p)
        ans.rhs[static_cast<size_t>(r * (rows_deg + 1) + p)] = reduced[static_cast<size_t>(r)].coeff(p);

  return ans;
}

SolutionSet polynomial_solutions(const QRecSystem& sys, int max_degree) {
  const int m = sys.dim();
  const int n = max_degree;
  const AnsatzSystem ans = build_ansatz(sys, n);
  const LinearSolution lin = solve_linear(ans.lhs, ans.rhs);

  const auto unpack = [&](const QVector& v) {
    std::vector<RationalFunction> y;
    y.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> coeffs(v.begin() + i * (n + 1), v.begin() + (i + 1) * (n + 1));
      y.emplace_back(TPoly::from_coeffs(std::move(coeffs)));
    }
    return y;
  };

  SolutionSet out;
  for (const auto& k : lin.kernel) out.homogeneous_basis.push_back(unpack(k));
  if (!all_zero(sys.b) && ans.rhs_compatible && lin.consistent) out.particular = unpack(lin.particular);
  return out;
}

QRecSystem substitute_t_power(const QRecSystem& sys, int n) {
  if (n < 0) throw std::invalid_argument("negative substitution exponent");
  if (n == 0) return sys;
  const int m = sys.dim();
  const Rational& q = sys.q();
  const int s = sys.order();

  std::vector<Rational> factor(static_cast<size_t>(s) + 1);
  for (int j = 0; j <= s; ++j) factor[static_cast<size_t>(j)] = q.pow(-static_cast<long>(n) * j);

  OreMatrix a(q, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a.at(i, j) = scale_sigma_coeffs(sys.A.at(i, j), q, factor, {});

  std::vector<TPoly> b = sys.b;
  int nu = sys.nu;
  if (n >= nu) {
    for (auto& p : b) p = p.times_power(n - nu);
    nu = 0;
  } else {
    nu -= n;
  }
  return QRecSystem(std::move(a), std::move(b), nu);
}

QRecSystem substitute_denominator(const QRecSystem& sys, int n, const TPoly& d) {
  if (d.is_zero() || d.coeff(0).is_zero())
    throw std::invalid_argument("aperiodic denominator must be nonzero and not divisible by t");
  if (d == TPoly(1)) return substitute_t_power(sys, n);
  if (n < 0) throw std::invalid_argument("negative substitution exponent");

  const int m = sys.dim();
  const Rational& q = sys.q();
  const int s = sys.order();

  // Shifted copies d(q^k t) and the products that clear each denominator.
  std::vector<TPoly> shifted(static_cast<size_t>(s) + 1);
  for (int k = 0; k <= s; ++k) shifted[static_cast<size_t>(k)] = d.scale_arg(q.pow(k));
  std::vector<Rational> factor(static_cast<size_t>(s) + 1);
  std::vector<TPoly> others(static_cast<size_t>(s) + 1);
  TPoly full(1);
  for (int k = 0; k <= s; ++k) full *= shifted[static_cast<size_t>(k)];
  for (int j = 0; j <= s; ++j) {
    factor[static_cast<size_t>(j)] = q.pow(-static_cast<long>(n) * j);
    TPoly prod(1);
    for (int k = 0; k <= s; ++k)
      if (k != j) prod *= shifted[static_cast<size_t>(k)];
    others[static_cast<size_t>(j)] = std::move(prod);
  }

  OreMatrix a(q, m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a.at(i, j) = scale_sigma_coeffs(sys.A.at(i, j), q, factor, others);

  std::vector<TPoly> b = sys.b;
  int nu = sys.nu;
  const int up = n >= nu ? n - nu : 0;
  nu = n >= nu ? 0 : nu - n;
  for (auto& p : b) p = (p * full).times_power(up);
  return QRecSystem(std::move(a), std::move(b), nu);
}

SolutionSet rational_t_solutions(const QRecSystem& sys, const TPoly& aperiodic_denominator,
                                 RationalSolvePipeline* pipeline) {
  if (aperiodic_denominator.is_zero() || aperiodic_denominator.coeff(0).is_zero())
    throw std::invalid_argument("aperiodic denominator must be nonzero and not divisible by t");

  const auto [tail_sys, tail_trace] = tail_regularize(sys);
  const BoundReport den_report = denominator_t_bound(tail_sys);
  const int n_star = *den_report.bound;
  if (pipeline) pipeline->denominator_report = den_report;

  const QRecSystem substituted = substitute_denominator(tail_sys, n_star, aperiodic_denominator);
  const auto [head_sys, head_trace] = head_regularize(substituted);
  const BoundReport deg_report = degree_bound(head_sys);
  if (pipeline) pipeline->degree_report = deg_report;

  SolutionSet out;
  out.denominator_exponent = n_star;
  if (!deg_report.bound) return out;  // no nonzero polynomial part: empty solution set

  const SolutionSet z = polynomial_solutions(head_sys, *deg_report.bound);
  const RationalFunction scale(TPoly(1), TPoly::monomial(Rational(1), n_star) * aperiodic_denominator);
  const auto map_back = [&](const std::vector<RationalFunction>& zv) {
    std::vector<RationalFunction> y;
    y.reserve(zv.size());
    for (const auto& f : zv) y.push_back(f * scale);
    return y;
  };

  const std::vector<RationalFunction> zero_rhs(static_cast<size_t>(sys.dim()));
  for (const auto& zb : z.homogeneous_basis) {
    auto y = map_back(zb);
    if (apply_matrix(sys.A, y) != zero_rhs)
      throw std::runtime_error("internal: homogeneous solution failed verification");
    out.homogeneous_basis.push_back(std::move(y));
  }
  if (z.particular) {
    auto y = map_back(*z.particular);
    if (!verify_solution(sys, y)) throw std::runtime_error("internal: particular solution failed verification");
    out.particular = std::move(y);
  }
  return out;
}

bool verify_solution(const QRecSystem& sys, const std::vector<RationalFunction>& y) {
  if (static_cast<int>(y.size()) != sys.dim()) throw std::invalid_argument("solution vector length mismatch");
  return apply_matrix(sys.A, y) == sys.rhs();
}

}  // namespace qrec
