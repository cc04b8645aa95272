#include "qrec/regularize.hpp"

#include <stdexcept>

#include "qrec/errors.hpp"

namespace qrec {

namespace {

// Left-multiply the system by a K[sigma]-matrix, updating the right hand
// side with sigma^a . (t^{-nu} p(t)) = q^{-a nu} t^{-nu} p(q^a t).
QRecSystem apply_sigma_matrix(const SigmaMatrix& s, const QRecSystem& sys) {
  const int m = sys.dim();
  if (s.rows() != m || s.cols() != m) throw std::invalid_argument("transform dimension mismatch");
  OreMatrix a = OreMatrix::from_sigma(s, sys.q()) * sys.A;
  const Rational& q = sys.q();
  std::vector<TPoly> b(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    TPoly acc;
    for (int j = 0; j < m; ++j) {
      const SigmaPoly& p = s.at(i, j);
      const TPoly& bj = sys.b[static_cast<size_t>(j)];
      if (p.is_zero() || bj.is_zero()) continue;
      for (int aa = 0; aa <= *p.degree(); ++aa) {
        const Rational& pa = p.coeff(aa);
        if (pa.is_zero()) continue;
        acc += (pa * q.pow(-static_cast<long>(aa) * sys.nu)) * bj.scale_arg(q.pow(aa));
      }
    }
    b[static_cast<size_t>(i)] = std::move(acc);
  }
  return QRecSystem(std::move(a), std::move(b), sys.nu);
}

// Scale the rows below `rank` by t^{-1} (tail) or t (head).  The tail case
// raises nu by one and re-homogenizes the untouched rows.
QRecSystem apply_scale(Direction dir, int rank, const QRecSystem& sys) {
  const int m = sys.dim();
  if (rank < 0 || rank > m) throw std::invalid_argument("scale step rank out of range");
  const Rational& q = sys.q();
  OreMatrix a = sys.A;
  std::vector<TPoly> b = sys.b;
  int nu = sys.nu;

  const auto map_entry = [&](const OrePoly& p, bool up) {
    std::vector<TPoly> cs;
    const int sd = p.sigma_degree().value_or(-1);
    cs.reserve(static_cast<size_t>(sd + 1));
    for (int j = 0; j <= sd; ++j) cs.push_back(up ? p.coeff(j).times_power(1) : p.coeff(j).divided_by_power(1));
    return OrePoly(q, std::move(cs));
  };

  if (dir == Direction::Head) {
    for (int i = rank; i < m; ++i) {
      for (int j = 0; j < m; ++j) a.at(i, j) = map_entry(a.at(i, j), true);
      b[static_cast<size_t>(i)] = b[static_cast<size_t>(i)].times_power(1);
    }
  } else {
    for (int i = rank; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        try {
          a.at(i, j) = map_entry(a.at(i, j), false);
        } catch (const std::invalid_argument&) {
          throw std::runtime_error("internal: lower row not divisible by t in tail scaling");
        }
      }
    nu += 1;
    for (int i = 0; i < rank; ++i) b[static_cast<size_t>(i)] = b[static_cast<size_t>(i)].times_power(1);
  }
  return QRecSystem(std::move(a), std::move(b), nu);
}

SigmaMatrix target_matrix(Direction dir, const QRecSystem& sys) {
  return dir == Direction::Tail ? sys.A.t_trailing() : sys.A.t_leading();
}

std::pair<QRecSystem, RegularizationTrace> regularize_impl(const QRecSystem& sys, Direction dir,
                                                           const RegularizeOptions& opts) {
  const int m = sys.dim();
  if (ore_row_rank(sys.A) < m) throw InfeasibleError("system not regular; remove redundancies first");

  const int ell0 = sys.A.t_degree().value_or(0);
  const int s0 = sys.A.sigma_degree().value_or(0);
  const long cap =
      opts.max_steps > 0 ? opts.max_steps : 10L * m * (ell0 + 1) * (s0 + 1);

  RegularizationTrace trace{dir, {}};
  QRecSystem cur = sys;
  long used = 0;
  const auto bump = [&] {
    if (++used > cap)
      throw InfeasibleError("regularization exceeded the step cap; increase max_steps or check the input");
  };
  const auto check_degree = [&](const QRecSystem& s) {
    if (dir == Direction::Head && s.A.t_degree().value_or(-1) != ell0)
      throw std::runtime_error("internal: t-degree changed during head regularization");
  };

  while (true) {
    const SigmaMatrix target = target_matrix(dir, cur);
    if (!sigma_det(target).is_zero()) return {cur, trace};
    bump();

    PopovResult pr = popov_form(target);
    const int r = pr.rank;
    // The head variant pre-twists the transform so that it acts on the
    // t-leading block without the q-commutation factors.
    SigmaMatrix applied = dir == Direction::Head ? pr.U.twist(cur.q().pow(-ell0)) : pr.U;
    cur = apply_sigma_matrix(applied, cur);
    check_degree(cur);
    trace.steps.push_back({TraceStep::Kind::Popov, applied, pr.P, r});
    {
      const SigmaMatrix t2 = target_matrix(dir, cur);
      if (t2.top_rows(r) != pr.P || !t2.bottom_rows(m - r).is_zero())
        throw std::runtime_error("internal: Popov step did not normalize the target block");
    }

    bool back_to_outer = false;
    while (!back_to_outer) {
      bump();
      cur = apply_scale(dir, r, cur);
      trace.steps.push_back({TraceStep::Kind::Scale, SigmaMatrix(), SigmaMatrix(), r});
      check_degree(cur);

      const SigmaMatrix scaled = target_matrix(dir, cur);
      if (!sigma_det(scaled).is_zero()) return {cur, trace};
      if (scaled.top_rows(r) != pr.P)
        throw std::runtime_error("internal: upper target block changed during scaling");

      const SigmaMatrix c = scaled.bottom_rows(m - r);
      if (c.is_zero()) continue;

      const DivisionResult div = reduce_rows(c, pr.P);
      if (!div.X.is_zero()) {
        SigmaMatrix qm = SigmaMatrix::identity(m);
        for (int i = 0; i < m - r; ++i)
          for (int j = 0; j < r; ++j) qm.at(r + i, j) = -div.X.at(i, j);
        if (dir == Direction::Head) qm = qm.twist(cur.q().pow(-ell0));
        cur = apply_sigma_matrix(qm, cur);
        check_degree(cur);
        trace.steps.push_back({TraceStep::Kind::Reduce, qm, SigmaMatrix(), r});
      }
      back_to_outer = !div.Y.is_zero();
    }
  }
}

}  // namespace

std::pair<QRecSystem, RegularizationTrace> tail_regularize(const QRecSystem& sys,
                                                           const RegularizeOptions& opts) {
  return regularize_impl(sys, Direction::Tail, opts);
}

std::pair<QRecSystem, RegularizationTrace> head_regularize(const QRecSystem& sys,
                                                           const RegularizeOptions& opts) {
  return regularize_impl(sys, Direction::Head, opts);
}

QRecSystem apply_step(const TraceStep& step, Direction direction, const QRecSystem& sys) {
  switch (step.kind) {
    case TraceStep::Kind::Popov:
    case TraceStep::Kind::Reduce:
      return apply_sigma_matrix(step.transform, sys);
    case TraceStep::Kind::Scale:
      return apply_scale(direction, step.rank, sys);
  }
  throw std::logic_error("unreachable");
}

QRecSystem replay_trace(const RegularizationTrace& trace, const QRecSystem& sys) {
  QRecSystem cur = sys;
  for (const auto& step : trace.steps) cur = apply_step(step, trace.direction, cur);
  return cur;
}

}  // namespace qrec
