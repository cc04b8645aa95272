#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrec/bounds.hpp"
#include "qrec/io.hpp"
#include "qrec/linalg.hpp"
#include "qrec/popov.hpp"
#include "qrec/regularize.hpp"
#include "qrec/solve.hpp"

namespace qtest {

using namespace qrec;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open test data file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline QRecSystem load_system(const std::string& name) {
  return parse_system(read_file(std::string(QREC_TEST_DATA_DIR) + "/" + name));
}

// The running 2x2 example used throughout the tests (q = 2, nu = 0, b = 0).
inline QRecSystem example_system() {
  OreMatrix a(Rational(2), 2, 2);
  const auto tp = [](const std::string& s) { return parse_poly(s); };
  a.at(0, 0) = OrePoly(Rational(2), {tp("16t - 4"), tp("-16t + 4"), tp("8")});
  a.at(0, 1) = OrePoly(Rational(2), {tp("-8t^3 - 1"), tp("8")});
  a.at(1, 0) = OrePoly(Rational(2), {tp("16t^2 - 8t + 4"), tp("-16t^2 + 16t - 12"), tp("8")});
  a.at(1, 1) = OrePoly(Rational(2), {tp("-8t^4 - 1"), tp("8")});
  return QRecSystem(std::move(a), {TPoly(), TPoly()}, 0);
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }

  Rational rational(int max_abs = 9, int max_den = 3) {
    return Rational(uniform(-max_abs, max_abs), uniform(1, max_den));
  }

  Rational nonzero_rational(int max_abs = 9, int max_den = 3) {
    while (true) {
      Rational r = rational(max_abs, max_den);
      if (!r.is_zero()) return r;
    }
  }

  Rational random_q() {
    static const long nums[] = {2, 3, -2, 5, -3};
    static const long dens[] = {1, 1, 1, 3, 2};
    const int i = uniform(0, 4);
    return Rational(nums[i], dens[i]);
  }

  template <class Tag>
  BasicPoly<Tag> poly(int max_deg, int zero_percent = 30) {
    std::vector<Rational> cs(static_cast<size_t>(uniform(0, max_deg)) + 1);
    for (auto& c : cs) c = uniform(0, 99) < zero_percent ? Rational(0) : rational();
    return BasicPoly<Tag>::from_coeffs(std::move(cs));
  }

  template <class Tag>
  BasicPoly<Tag> nonzero_poly(int max_deg, int zero_percent = 30) {
    while (true) {
      auto p = poly<Tag>(max_deg, zero_percent);
      if (!p.is_zero()) return p;
    }
  }

  TPoly tpoly(int max_deg) { return poly<TVarTag>(max_deg); }
  TPoly nonzero_tpoly(int max_deg) { return nonzero_poly<TVarTag>(max_deg); }
  SigmaPoly spoly(int max_deg) { return poly<SigmaVarTag>(max_deg); }
  SigmaPoly nonzero_spoly(int max_deg) { return nonzero_poly<SigmaVarTag>(max_deg); }

  SigmaMatrix sigma_matrix(int rows, int cols, int max_deg) {
    SigmaMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = spoly(max_deg);
    return m;
  }

  OrePoly ore_poly(const Rational& q, int max_sdeg, int max_tdeg) {
    std::vector<TPoly> cs(static_cast<size_t>(uniform(0, max_sdeg)) + 1);
    for (auto& c : cs) c = tpoly(max_tdeg);
    return OrePoly(q, std::move(cs));
  }

  OreMatrix ore_matrix(const Rational& q, int m, int max_sdeg, int max_tdeg) {
    OreMatrix a(q, m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) a.at(i, j) = ore_poly(q, max_sdeg, max_tdeg);
    return a;
  }

  OreMatrix regular_ore_matrix(const Rational& q, int m, int max_sdeg, int max_tdeg) {
    while (true) {
      OreMatrix a = ore_matrix(q, m, max_sdeg, max_tdeg);
      if (ore_row_rank(a) == m) return a;
    }
  }

  RationalFunction t_power_solution_entry(int max_num_deg, int max_den_exp) {
    TPoly num = nonzero_tpoly(max_num_deg);
    if (num.coeff(0).is_zero()) num += TPoly(nonzero_rational());
    return RationalFunction(num, TPoly::monomial(Rational(1), uniform(0, max_den_exp)));
  }

  // Product of random elementary row operations over K[x]; unimodular.
  SigmaMatrix unimodular_sigma(int n, int ops, int max_deg = 2) {
    SigmaMatrix v = SigmaMatrix::identity(n);
    for (int k = 0; k < ops; ++k) {
      const int kind = uniform(0, 2);
      const int i = uniform(0, n - 1);
      int j = uniform(0, n - 1);
      if (kind == 0) {
        const Rational c = nonzero_rational(5, 2);
        for (int col = 0; col < n; ++col) v.at(i, col) = c * v.at(i, col);
      } else if (kind == 1 && n > 1) {
        while (j == i) j = uniform(0, n - 1);
        const SigmaPoly f = spoly(max_deg);
        for (int col = 0; col < n; ++col) v.at(i, col) += f * v.at(j, col);
      } else if (n > 1) {
        while (j == i) j = uniform(0, n - 1);
        for (int col = 0; col < n; ++col) std::swap(v.at(i, col), v.at(j, col));
      }
    }
    return v;
  }
};

// Attach a right hand side so that y solves the system exactly.  Every entry
// of A . y must have a pure t-power denominator (true when the planted y does).
inline QRecSystem plant_solution(const OreMatrix& a, const std::vector<RationalFunction>& y) {
  const auto image = apply_matrix(a, y);
  int nu = 0;
  for (const auto& f : image) {
    const TPoly& den = f.den();
    const int deg = den.degree().value_or(0);
    if (den != TPoly::monomial(Rational(1), deg))
      throw std::runtime_error("planted image has a non-t-power denominator");
    nu = std::max(nu, deg);
  }
  std::vector<TPoly> b;
  b.reserve(image.size());
  for (const auto& f : image) b.push_back(f.num().times_power(nu - f.den().degree().value_or(0)));
  return QRecSystem(a, std::move(b), nu);
}

// Multiply one row (A and b) by t: keeps solutions, kills the trailing matrix row.
inline QRecSystem scale_row_by_t(const QRecSystem& sys, int row) {
  OreMatrix a = sys.A;
  for (int j = 0; j < sys.dim(); ++j) {
    const OrePoly& p = a.at(row, j);
    std::vector<TPoly> cs;
    for (int k = 0; k <= p.sigma_degree().value_or(-1); ++k) cs.push_back(p.coeff(k).times_power(1));
    a.at(row, j) = OrePoly(sys.q(), std::move(cs));
  }
  std::vector<TPoly> b = sys.b;
  b[static_cast<size_t>(row)] = b[static_cast<size_t>(row)].times_power(1);
  return QRecSystem(std::move(a), std::move(b), sys.nu);
}

// Regular matrix whose t-leading matrix is singular: the top t-coefficient is
// a K[x]-row-dependent block, everything else has smaller t-degree.
inline OreMatrix head_singular_matrix(Rng& rng, const Rational& q, int m, int max_sdeg, int ell) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    SigmaMatrix top(m, m);
    for (int i = 0; i + 1 < m; ++i)
      for (int j = 0; j < m; ++j) top.at(i, j) = rng.spoly(max_sdeg);
    for (int j = 0; j < m; ++j) {
      SigmaPoly acc;
      for (int i = 0; i + 1 < m; ++i) acc += SigmaPoly(rng.rational(3, 1)) * top.at(i, j);
      top.at(m - 1, j) = acc;
    }
    if (top.is_zero() || !sigma_det(top).is_zero()) continue;

    OreMatrix a = OreMatrix::from_sigma(top, q);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const OrePoly& p = a.at(i, j);
        std::vector<TPoly> cs;
        for (int k = 0; k <= p.sigma_degree().value_or(-1); ++k) cs.push_back(p.coeff(k).times_power(ell));
        OrePoly lifted(q, std::move(cs));
        a.at(i, j) = lifted + rng.ore_poly(q, max_sdeg, ell - 1);
      }
    if (a.t_degree().value_or(-1) != ell) continue;
    if (!sigma_det(a.t_leading()).is_zero()) continue;
    if (ore_row_rank(a) == m) return a;
  }
  throw std::runtime_error("failed to build a head-singular regular matrix");
}

// Independent determinant oracle: sum over permutations.
inline SigmaPoly leibniz_det(const SigmaMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("oracle determinant of non-square matrix");
  const int n = m.rows();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  SigmaPoly det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    SigmaPoly term(1);
    for (int i = 0; i < n; ++i) term *= m.at(i, perm[static_cast<size_t>(i)]);
    det += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Independent Groebner reduction oracle: subtract pivot multiples until no
// term is divisible by any pivot of p; returns the remainder row.
inline std::vector<SigmaPoly> naive_reduce(std::vector<SigmaPoly> row, const SigmaMatrix& p) {
  bool again = true;
  while (again) {
    again = false;
    for (int k = 0; k < p.rows(); ++k) {
      const TopTerm piv = top_leading_term(p.row(k));
      const auto d = row[static_cast<size_t>(piv.position)].degree();
      if (!d || *d < piv.degree) continue;
      const SigmaPoly f =
          SigmaPoly::monomial(row[static_cast<size_t>(piv.position)].coeff(*d), *d - piv.degree);
      for (int j = 0; j < p.cols(); ++j) row[static_cast<size_t>(j)] -= f * p.at(k, j);
      again = true;
    }
  }
  return row;
}

inline bool row_zero(const std::vector<SigmaPoly>& row) {
  return std::all_of(row.begin(), row.end(), [](const SigmaPoly& x) { return x.is_zero(); });
}

// Rows equal up to one nonzero constant per row.
inline bool rows_proportional(const SigmaMatrix& a, const SigmaMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i) {
    Rational factor(0);
    for (int j = 0; j < a.cols(); ++j) {
      const SigmaPoly& x = a.at(i, j);
      const SigmaPoly& y = b.at(i, j);
      if (x.is_zero() != y.is_zero()) return false;
      if (x.is_zero()) continue;
      if (factor.is_zero()) {
        const auto dx = x.degree();
        if (dx != y.degree()) return false;
        factor = y.coeff(*dx) / x.coeff(*dx);
      }
      if (factor * x != y) return false;
    }
  }
  return true;
}

// Exact span comparison of two sets of rational-function vectors.
inline bool same_span(const std::vector<std::vector<RationalFunction>>& a,
                      const std::vector<std::vector<RationalFunction>>& b) {
  TPoly den(1);
  const auto fold_den = [&](const std::vector<std::vector<RationalFunction>>& set) {
    for (const auto& v : set)
      for (const auto& f : v) {
        const TPoly g = poly_gcd(den, f.den());
        den = poly_divmod(den * f.den(), g).quotient;
      }
  };
  fold_den(a);
  fold_den(b);

  int width = 1;
  const auto widen = [&](const std::vector<std::vector<RationalFunction>>& set) {
    for (const auto& v : set)
      for (const auto& f : v) {
        const RationalFunction g = f * RationalFunction(den);
        if (!g.is_polynomial()) throw std::runtime_error("span comparison: denominators did not clear");
        width = std::max(width, g.num().degree().value_or(0) + 1);
      }
  };
  widen(a);
  widen(b);

  const auto flatten = [&](const std::vector<RationalFunction>& v) {
    QVector out;
    for (const auto& f : v) {
      const RationalFunction g = f * RationalFunction(den);
      for (int k = 0; k < width; ++k) out.push_back(g.num().coeff(k));
    }
    return out;
  };

  QMatrix ma, mb, mall;
  for (const auto& v : a) {
    ma.push_back(flatten(v));
    mall.push_back(ma.back());
  }
  for (const auto& v : b) {
    mb.push_back(flatten(v));
    mall.push_back(mb.back());
  }
  const int ra = matrix_rank(ma);
  const int rb = matrix_rank(mb);
  return ra == rb && matrix_rank(mall) == ra;
}

}  // namespace qtest
