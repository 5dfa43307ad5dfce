#pragma once

// Cech hypercohomology of a complex of twisted free modules.
//
// The cover is given by chart variables u_0..u_r of the ring; chart sigma
// inverts u_sigma. A section over sigma in degree D is stored as a / u_sigma^B
// with a in the non-localized piece of degree D + twist + B * deg(u_sigma), so
// the bound B only limits the depth of denominators. Restriction to
// tau = sigma + {m} multiplies by u_m^B with sign (-1)^{position of m in tau}.
// As B grows these subcomplexes exhaust the localized Cech complex, and the
// computed dimensions converge to the true ones.
//
// Total degree n = p - k for Cech level p and homological index k; the total
// differential is delta + (-1)^p d. With no charts this is plain homology:
// H^n = H_{-n}.

#include "wblow/complex.hpp"
#include "wblow/truncation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wblow {

/// One dimension cell: index (cohomological or homological, see the table),
/// bigraded degree, and its stabilization record.
struct DimCell {
  int index = 0;
  Degree degree;
  StabilizedDims dims;
  std::optional<std::string> witness;
};

struct DimTable {
  std::vector<DimCell> cells;

  bool all_stable() const;
  /// Throws std::out_of_range when absent.
  const DimCell& at(int index, const Degree& degree) const;
  long value(int index, const Degree& degree) const { return at(index, degree).dims.value(); }
};

struct HyperEvaluation {
  std::map<int, long> dims;
  std::map<int, std::string> witnesses;
  bool truncation_active = false;
};

/// Evaluates hypercohomology of one degree at one bound.
class HypercohomologyEngine {
 public:
  HypercohomologyEngine(const GradedComplex& complex, std::vector<std::size_t> chart_vars);
  ~HypercohomologyEngine();
  HypercohomologyEngine(const HypercohomologyEngine&) = delete;
  HypercohomologyEngine& operator=(const HypercohomologyEngine&) = delete;

  /// Range of total degrees that can be nonzero.
  int min_total_degree() const;
  int max_total_degree() const;

  /// H^n at degree D for each n in `ns`. `bound` is ignored without charts.
  /// Witness cycles are produced for nonzero cells when requested.
  HyperEvaluation evaluate(const Degree& degree, int bound, const std::vector<int>& ns,
                           bool witnesses = false) const;

  /// Smallest denominator depth at which every class of degree D can appear:
  /// a class of t-weight r needs u_i^a with a <= (-r - sum_{j != i} w_j) / w_i,
  /// taken over all twists of the complex. 0 without charts.
  int minimum_bound(const Degree& degree) const;

  /// Rank, modulo boundaries, of global elements of the ring placed in total
  /// degree 0: g on chart sigma = {i} is g * u_i^B / u_i^B. Needs a complex
  /// whose index-0 module is O.
  long section_rank(const Degree& degree, int bound, const std::vector<Polynomial>& sections) const;

 private:
  struct Impl;
  Impl* impl_;
};

/// Stabilized hypercohomology H^n for every n in `ns` and degree in
/// `degrees`. Each degree starts at max(trunc.bound, minimum_bound); when that
/// exceeds trunc.max_bound the cells are evaluated once and left unstable.
/// Witnesses are attached to stable nonzero cells when requested.
DimTable hypercohomology(const GradedComplex& complex, const std::vector<std::size_t>& chart_vars,
                         const std::vector<Degree>& degrees, const std::vector<int>& ns,
                         const Truncation& trunc, bool witnesses = false);

/// Worker threads used for independent degrees (speed only; results are
/// identical for every setting).
void set_thread_count(int n);
int thread_count();

}  // namespace wblow
