#include "qrec/popov.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace qrec {

namespace {

bool row_is_zero(const std::vector<SigmaPoly>& row) {
  return std::all_of(row.begin(), row.end(), [](const SigmaPoly& p) { return p.is_zero(); });
}

void add_multiple(std::vector<SigmaPoly>& dst, const SigmaPoly& f, const std::vector<SigmaPoly>& src) {
  for (size_t j = 0; j < dst.size(); ++j) dst[j] += f * src[j];
}

}  // namespace

TopTerm top_leading_term(const std::vector<SigmaPoly>& row) {
  std::optional<TopTerm> best;
  for (int j = 0; j < static_cast<int>(row.size()); ++j) {
    const auto d = row[static_cast<size_t>(j)].degree();
    if (!d) continue;
    if (!best || *d > best->degree) best = TopTerm{j, *d};
  }
  if (!best) throw std::invalid_argument("leading term of zero row");
  return *best;
}

PopovResult popov_form(const SigmaMatrix& m) {
  const int nrows = m.rows();
  const int ncols = m.cols();
  std::vector<std::vector<SigmaPoly>> rows(static_cast<size_t>(nrows));
  std::vector<std::vector<SigmaPoly>> urows(static_cast<size_t>(nrows));
  for (int i = 0; i < nrows; ++i) {
    rows[static_cast<size_t>(i)] = m.row(i);
    urows[static_cast<size_t>(i)] = SigmaMatrix::identity(nrows).row(i);
  }

  // Head reduction: no leading term may divide another.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < nrows && !changed; ++i) {
      if (row_is_zero(rows[static_cast<size_t>(i)])) continue;
      const TopTerm lti = top_leading_term(rows[static_cast<size_t>(i)]);
      for (int j = 0; j < nrows; ++j) {
        if (j == i || row_is_zero(rows[static_cast<size_t>(j)])) continue;
        const TopTerm ltj = top_leading_term(rows[static_cast<size_t>(j)]);
        if (ltj.position != lti.position || ltj.degree > lti.degree) continue;
        const Rational c = rows[static_cast<size_t>(i)][static_cast<size_t>(lti.position)].leading_coeff() /
                           rows[static_cast<size_t>(j)][static_cast<size_t>(ltj.position)].leading_coeff();
        const SigmaPoly f = SigmaPoly::monomial(-c, lti.degree - ltj.degree);
        add_multiple(rows[static_cast<size_t>(i)], f, rows[static_cast<size_t>(j)]);
        add_multiple(urows[static_cast<size_t>(i)], f, urows[static_cast<size_t>(j)]);
        changed = true;
        break;
      }
    }
  }

  // Tail reduction: clear every non-leading term divisible by another pivot.
  changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < nrows; ++i) {
      if (row_is_zero(rows[static_cast<size_t>(i)])) continue;
      for (int j = 0; j < nrows; ++j) {
        if (j == i || row_is_zero(rows[static_cast<size_t>(j)])) continue;
        const TopTerm ltj = top_leading_term(rows[static_cast<size_t>(j)]);
        const SigmaPoly& entry = rows[static_cast<size_t>(i)][static_cast<size_t>(ltj.position)];
        const auto d = entry.degree();
        if (!d || *d < ltj.degree) continue;
        const Rational c = entry.coeff(*d) /
                           rows[static_cast<size_t>(j)][static_cast<size_t>(ltj.position)].leading_coeff();
        const SigmaPoly f = SigmaPoly::monomial(-c, *d - ltj.degree);
        add_multiple(rows[static_cast<size_t>(i)], f, rows[static_cast<size_t>(j)]);
        add_multiple(urows[static_cast<size_t>(i)], f, urows[static_cast<size_t>(j)]);
        changed = true;
      }
    }
  }

  // Monic pivots, nonzero rows sorted by pivot column, zero rows at the bottom.
  std::vector<int> nonzero;
  std::vector<int> zero;
  for (int i = 0; i < nrows; ++i) {
    if (row_is_zero(rows[static_cast<size_t>(i)]))
      zero.push_back(i);
    else
      nonzero.push_back(i);
  }
  for (int i : nonzero) {
    const TopTerm lt = top_leading_term(rows[static_cast<size_t>(i)]);
    const Rational lc = rows[static_cast<size_t>(i)][static_cast<size_t>(lt.position)].leading_coeff();
    if (!lc.is_one()) {
      const Rational inv = lc.inverse();
      for (auto& p : rows[static_cast<size_t>(i)]) p = inv * p;
      for (auto& p : urows[static_cast<size_t>(i)]) p = inv * p;
    }
  }
  std::sort(nonzero.begin(), nonzero.end(), [&](int a, int b) {
    return top_leading_term(rows[static_cast<size_t>(a)]).position <
           top_leading_term(rows[static_cast<size_t>(b)]).position;
  });

  PopovResult res{SigmaMatrix(static_cast<int>(nonzero.size()), ncols), SigmaMatrix(nrows, nrows),
                  static_cast<int>(nonzero.size())};
  for (int i = 0; i < res.rank; ++i) {
    res.P.set_row(i, rows[static_cast<size_t>(nonzero[static_cast<size_t>(i)])]);
    res.U.set_row(i, urows[static_cast<size_t>(nonzero[static_cast<size_t>(i)])]);
  }
  for (size_t k = 0; k < zero.size(); ++k)
    res.U.set_row(res.rank + static_cast<int>(k), urows[static_cast<size_t>(zero[k])]);
  return res;
}

bool is_popov(const SigmaMatrix& p) {
  std::vector<TopTerm> pivots;
  for (int i = 0; i < p.rows(); ++i) {
    const auto row = p.row(i);
    if (row_is_zero(row)) return false;
    const TopTerm lt = top_leading_term(row);
    if (!row[static_cast<size_t>(lt.position)].leading_coeff().is_one()) return false;
    if (!pivots.empty() && lt.position <= pivots.back().position) return false;
    pivots.push_back(lt);
  }
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.rows(); ++j) {
      if (i == j) continue;
      const auto d = p.at(i, pivots[static_cast<size_t>(j)].position).degree();
      if (d && *d >= pivots[static_cast<size_t>(j)].degree) return false;
    }
  return true;
}

DivisionResult reduce_rows(const SigmaMatrix& c, const SigmaMatrix& p) {
  if (c.cols() != p.cols()) throw std::invalid_argument("matrix dimension mismatch");
  if (!is_popov(p)) throw std::invalid_argument("divisor matrix not in Popov form");

  std::vector<TopTerm> pivots;
  pivots.reserve(static_cast<size_t>(p.rows()));
  for (int i = 0; i < p.rows(); ++i) pivots.push_back(top_leading_term(p.row(i)));

  DivisionResult res{SigmaMatrix(c.rows(), p.rows()), SigmaMatrix(c.rows(), c.cols())};
  for (int i = 0; i < c.rows(); ++i) {
    auto y = c.row(i);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int k = 0; k < p.rows(); ++k) {
        const TopTerm piv = pivots[static_cast<size_t>(k)];
        auto d = y[static_cast<size_t>(piv.position)].degree();
        while (d && *d >= piv.degree) {
          const Rational coef = y[static_cast<size_t>(piv.position)].coeff(*d);
          const SigmaPoly f = SigmaPoly::monomial(coef, *d - piv.degree);
          res.X.at(i, k) += f;
          add_multiple(y, -f, p.row(k));
          changed = true;
          d = y[static_cast<size_t>(piv.position)].degree();
        }
      }
    }
    res.Y.set_row(i, y);
  }
  return res;
}

namespace detail {

SigmaPoly sigma_det_cofactor(const SigmaMatrix& m) {
  const int n = m.rows();
  if (n == 0) return SigmaPoly(1);
  if (n == 1) return m.at(0, 0);
  SigmaPoly det;
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (!m.at(i, 0).is_zero()) {
      SigmaMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int col = 1; col < n; ++col) minor.at(mr, col - 1) = m.at(r, col);
        ++mr;
      }
      SigmaPoly term = m.at(i, 0) * sigma_det_cofactor(minor);
      if (sign < 0) term = -term;
      det += term;
    }
    sign = -sign;
  }
  return det;
}

SigmaPoly sigma_det_bareiss(const SigmaMatrix& m) {
  const int n = m.rows();
  if (n == 0) return SigmaPoly(1);
  SigmaMatrix w = m;
  int sign = 1;
  SigmaPoly prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!w.at(r, k).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return SigmaPoly();
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        SigmaPoly num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
        auto dm = poly_divmod(num, prev);
        if (!dm.remainder.is_zero()) throw std::runtime_error("internal: inexact Bareiss division");
        w.at(i, j) = std::move(dm.quotient);
      }
      w.at(i, k) = SigmaPoly();
    }
    prev = w.at(k, k);
  }
  SigmaPoly det = w.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace detail

SigmaPoly sigma_det(const SigmaMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return m.rows() <= 4 ? detail::sigma_det_cofactor(m) : detail::sigma_det_bareiss(m);
}

namespace {

using OreRow = std::vector<OrePoly>;

bool ore_row_is_zero(const OreRow& row) {
  return std::all_of(row.begin(), row.end(), [](const OrePoly& p) { return p.is_zero(); });
}

int ore_row_degree(const OreRow& row) {
  int d = -1;
  for (const auto& p : row)
    if (auto dp = p.sigma_degree()) d = std::max(d, *dp);
  return d;
}

// One K(t)-dependency among the rows of w (as a left null vector), or empty.
std::vector<RationalFunction> left_kernel_vector(const std::vector<std::vector<RationalFunction>>& w) {
  const size_t k = w.size();
  const size_t n = k == 0 ? 0 : w[0].size();
  // Row-reduce [w | I]; a zero row in the w part exposes a dependency.
  std::vector<std::vector<RationalFunction>> aug(k);
  for (size_t i = 0; i < k; ++i) {
    aug[i] = w[i];
    aug[i].resize(n + k);
    aug[i][n + i] = RationalFunction(Rational(1));
  }
  size_t pr = 0;
  for (size_t col = 0; col < n && pr < k; ++col) {
    size_t piv = pr;
    while (piv < k && aug[piv][col].is_zero()) ++piv;
    if (piv == k) continue;
    std::swap(aug[pr], aug[piv]);
    for (size_t i = 0; i < k; ++i) {
      if (i == pr || aug[i][col].is_zero()) continue;
      const RationalFunction f = aug[i][col] / aug[pr][col];
      for (size_t j = 0; j < n + k; ++j) aug[i][j] -= f * aug[pr][j];
    }
    ++pr;
  }
  for (size_t i = 0; i < k; ++i) {
    bool zero = true;
    for (size_t j = 0; j < n; ++j)
      if (!aug[i][j].is_zero()) {
        zero = false;
        break;
      }
    if (zero) return {aug[i].begin() + static_cast<long>(n), aug[i].end()};
  }
  return {};
}

}  // namespace

int ore_row_rank(const OreMatrix& a) {
  const Rational& q = a.q();
  std::vector<OreRow> rows;
  for (int i = 0; i < a.rows(); ++i) {
    OreRow row;
    row.reserve(static_cast<size_t>(a.cols()));
    for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j));
    if (!ore_row_is_zero(row)) rows.push_back(std::move(row));
  }

  while (!rows.empty()) {
    const size_t k = rows.size();
    std::vector<int> degs(k);
    int dmax = 0;
    for (size_t i = 0; i < k; ++i) {
      degs[i] = ore_row_degree(rows[i]);
      dmax = std::max(dmax, degs[i]);
    }

    // Leading coefficient vectors, shifted to the common degree dmax.
    std::vector<std::vector<RationalFunction>> w(k);
    for (size_t i = 0; i < k; ++i) {
      const Rational shift = q.pow(dmax - degs[i]);
      w[i].reserve(static_cast<size_t>(a.cols()));
      for (const auto& p : rows[i]) w[i].emplace_back(p.coeff(degs[i]).scale_arg(shift));
    }

    const auto dep = left_kernel_vector(w);
    if (dep.empty()) return static_cast<int>(rows.size());

    // Pull the relation back to the support's own top degree and pick a row
    // of that degree to replace; this keeps the combination unimodular.
    int dsup = -1;
    for (size_t i = 0; i < k; ++i)
      if (!dep[i].is_zero()) dsup = std::max(dsup, degs[i]);
    size_t target = k;
    for (size_t i = 0; i < k; ++i)
      if (!dep[i].is_zero() && degs[i] == dsup) target = i;

    const Rational pullback = q.pow(dsup - dmax);
    std::vector<RationalFunction> coef(k);
    TPoly common_den(1);
    for (size_t i = 0; i < k; ++i) {
      coef[i] = dep[i].subs_qt(pullback);
      if (!coef[i].is_zero()) common_den = poly_divmod(common_den * coef[i].den(), poly_gcd(common_den, coef[i].den())).quotient;
    }

    OreRow combo(static_cast<size_t>(a.cols()), OrePoly(q));
    for (size_t i = 0; i < k; ++i) {
      if (coef[i].is_zero()) continue;
      const RationalFunction scaled = coef[i] * RationalFunction(common_den);
      if (!scaled.is_polynomial()) throw std::runtime_error("internal: denominator clearing failed");
      const OrePoly factor = OrePoly::monomial(q, scaled.num(), dsup - degs[static_cast<size_t>(i)]);
      for (size_t j = 0; j < combo.size(); ++j) combo[j] += ore_mul(factor, rows[i][j]);
    }
    if (ore_row_degree(combo) >= dsup) throw std::runtime_error("internal: leading term did not cancel");

    if (ore_row_is_zero(combo))
      rows.erase(rows.begin() + static_cast<long>(target));
    else
      rows[target] = std::move(combo);
  }
  return 0;
}

}  // namespace qrec
