#pragma once

#include "wblow/complex.hpp"
#include "wblow/total_complex.hpp"
#include "wblow/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wblow {

/// Cells are indexed by homological index k.
using HomologyTable = DimTable;

/// dim H_k at each requested degree, for every index carrying a module.
HomologyTable homology(const GradedComplex& complex, const std::vector<Degree>& degrees,
                       const Truncation& trunc, bool witnesses = false);

struct HomologyWitness {
  int index = 0;
  Degree degree;
  std::string cycle;
};

struct RegularityResult {
  Verdict verdict = Verdict::Pass;
  HomologyTable table;  // H_r for r >= 1 only
  std::optional<HomologyWitness> witness;
};

/// PASS when H_r of the Koszul complex vanishes for all r > 0 at every degree
/// of the window; FAIL with the first nonzero cycle otherwise.
RegularityResult koszul_regularity_check(const GradedRing& ring, const std::vector<SequenceEntry>& sequence,
                                         const std::vector<Degree>& degrees, const Truncation& trunc);

/// Degrees (w, a) for w in [wmin, wmax] and a in [amin, amax], row-major.
std::vector<Degree> degree_box(int wmin, int wmax, int amin, int amax);

}  // namespace wblow
