#pragma once

#include "wblow/homology.hpp"
#include "wblow/rees.hpp"
#include "wblow/total_complex.hpp"
#include "wblow/verdict.hpp"

#include <optional>
#include <vector>

namespace wblow {

/// Cells are indexed by cohomological index i; degree (r, k) is the t-degree
/// r together with the auxiliary degree k of the base.
using CohomologyTable = DimTable;

/// Cover of Spec(ring) minus V(charts) by the charts D(x_i), for the sheaf O(twist).
struct CechCover {
  GradedRing ring;
  std::vector<std::size_t> charts;
  Degree twist;
};

/// H^i(O(twist)) for i in [0, #charts - 1] at every requested degree.
CohomologyTable cech_cohomology(const CechCover& cover, const std::vector<Degree>& degrees,
                                const Truncation& trunc, bool witnesses = false);

/// Closed-form dimensions on the weighted projective stack P(weights) over Q:
/// entry i is dim H^i(O(r)).
std::vector<long> weighted_proj_cohomology_formula(const std::vector<int>& weights, int r);

/// Same over a base R: entry i is dim H^i(O(r))_k given dim R_k.
std::vector<long> weighted_proj_cohomology_formula(const std::vector<int>& weights, int r, long base_dim);

/// Ring base[x_0..x_n] with x_i of degree (d_i, 0); chart indices returned in `charts`.
GradedRing weighted_proj_ring(const GradedRing& base, const std::vector<int>& weights,
                              std::vector<std::size_t>& charts);

/// Cech route for P(weights) over `base`, at degrees (r, k) for k in `aux`.
CohomologyTable weighted_proj_cohomology_cech(const GradedRing& base, const std::vector<int>& weights, int r,
                                              const Truncation& trunc, const std::vector<int>& aux = {0});

/// Cech route on the blowup: charts D(u_i) of Spec A^ext, degrees (r, k).
CohomologyTable blowup_cohomology_cech(const BlowupPresentation& blowup, int r, const Truncation& trunc,
                                       const std::vector<int>& aux);

/// Default auxiliary window for twist r: [min(0, r * max aux f_i), max_aux].
std::vector<int> aux_window(const BlowupPresentation& blowup, int r, int max_aux);

struct SpectralRows {
  GradedComplex row_q0;  // K(f_i - u_i s^{d_i}) over R[s, u]
  GradedComplex row_qn;  // K(f_0..f_n) over R
  /// E_2^{0,0} and E_2^{0,n} per degree, as cells with index 0 and n.
  DimTable e2;
  /// Higher Koszul homology met by either row; must be zero.
  DimTable higher;
};

struct SpectralResult {
  Verdict regularity = Verdict::Pass;
  SpectralRows rows;
  CohomologyTable table;
};

/// Two-row spectral route: H^0 from E_2^{0,0}, H^n from E_2^{0,n}, the rows
/// adding when n = 0. Regularity is FAIL when some higher Koszul homology
/// used by either row is nonzero.
SpectralResult blowup_cohomology_spectral(const WeightedCentre& centre, int r, const Truncation& trunc,
                                          const std::vector<int>& aux);

struct PushforwardResult {
  Verdict verdict = Verdict::Pass;
  CohomologyTable blowup;     // H^i(O) at (0, k)
  std::vector<long> base_dims;  // dim R_k
  std::vector<long> unit_rank;  // rank of R_k -> H^0 at the last bound
  std::optional<std::string> witness;
};

/// Checks H^0(O)_k = R_k with injective unit map and H^{>0}(O) = 0 for k in [0, max_aux].
PushforwardResult pushforward_structure_check(const WeightedCentre& centre, const Truncation& trunc,
                                              int max_aux = 2);

}  // namespace wblow
