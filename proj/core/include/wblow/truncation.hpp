#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace wblow {

/// Exponent window for infinite-dimensional graded pieces.
///
/// `bound` is where a stabilization run starts, `step` the increment, and
/// `max_bound` the last bound that may be tried.
struct Truncation {
  int bound = 2;
  int step = 1;
  int max_bound = 12;

  /// Throws std::invalid_argument unless 1 <= bound <= max_bound and step >= 1.
  void validate() const;
  Truncation at(int b) const { return {b, step, max_bound}; }
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Dimensions of one cell computed at increasing bounds.
struct StabilizedDims {
  std::vector<std::pair<int, long>> dim_at_bound;
  bool stable = false;

  /// Dimension at the last bound tried.
  long value() const { return dim_at_bound.empty() ? -1 : dim_at_bound.back().second; }
  bool is_zero() const { return stable && value() == 0; }
  friend bool operator==(const StabilizedDims&, const StabilizedDims&) = default;
};

/// Result of evaluating every cell of a table at one bound.
struct BoundEvaluation {
  std::vector<long> dims;
  // False when the evaluation provably does not depend on the bound.
  bool truncation_active = true;
};

/// Evaluates `eval` at bound, bound+step, ... until every cell agrees at two
/// consecutive bounds or max_bound is exhausted. A bound-independent
/// evaluation is recorded at two bounds without being recomputed.
std::vector<StabilizedDims> stabilize(const Truncation& trunc, std::size_t cells,
                                      const std::function<BoundEvaluation(int)>& eval);

}  // namespace wblow
