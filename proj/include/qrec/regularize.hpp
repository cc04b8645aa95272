#pragma once

#include <utility>
#include <vector>

#include "qrec/ore.hpp"
#include "qrec/popov.hpp"

namespace qrec {

enum class Direction { Tail, Head };

// One elementary transformation applied to a system.  Popov and Reduce carry
// the full m x m matrix over K[x] that was multiplied from the left (for the
// head variant this is the twisted matrix actually applied, so a replay does
// not need to re-derive anything).  Scale multiplies the rows below `rank`
// by t^{-1} (tail) or t (head).
struct TraceStep {
  enum class Kind { Popov, Scale, Reduce };

  Kind kind;
  SigmaMatrix transform;    // Popov / Reduce only
  SigmaMatrix popov_block;  // Popov only: the canonical block produced
  int rank = 0;
};

struct RegularizationTrace {
  Direction direction = Direction::Tail;
  std::vector<TraceStep> steps;
};

struct RegularizeOptions {
  // 0 picks the default cap 10 * m * (l + 1) * (s + 1).
  int max_steps = 0;
};

// Transform a regular system into an equivalent one whose t-trailing matrix
// has nonzero determinant.  Throws InfeasibleError for rank-deficient input
// or when the step cap is exceeded.
std::pair<QRecSystem, RegularizationTrace> tail_regularize(const QRecSystem& sys,
                                                           const RegularizeOptions& opts = {});

// Same for the t-leading matrix; the t-degree of A is preserved throughout.
std::pair<QRecSystem, RegularizationTrace> head_regularize(const QRecSystem& sys,
                                                           const RegularizeOptions& opts = {});

QRecSystem apply_step(const TraceStep& step, Direction direction, const QRecSystem& sys);

// Deterministic replay; replay_trace(trace, input) reproduces the output of
// the regularization call that produced the trace.
QRecSystem replay_trace(const RegularizationTrace& trace, const QRecSystem& sys);

}  // namespace qrec
