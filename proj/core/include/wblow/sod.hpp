#pragma once

#include "wblow/cohomology.hpp"
#include "wblow/complex.hpp"
#include "wblow/homology.hpp"
#include "wblow/rees.hpp"
#include "wblow/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wblow {

/// Koszul complex of x_0..x_n on Q[x_0..x_n], x_i of degree (d_i, 0):
/// 0 -> O(-sum d) -> ... -> (+) O(-d_i) -> O -> 0.
GradedComplex beilinson_resolution(const std::vector<int>& weights);

struct SupportCheck {
  Verdict verdict = Verdict::Pass;
  HomologyTable homology;
  struct ClassRecord {
    int index = 0;
    Degree degree;
    std::size_t variable = 0;
    int power = 0;  // smallest k with x_i^k killing the whole piece; 0 if none up to the bound
  };
  std::vector<ClassRecord> annihilation;
  std::optional<std::string> witness;
};

/// Checks that the Koszul homology of `sequence` (default: x_0..x_n) on
/// Q[x_0..x_n] is killed by a power x_i^k, k <= trunc.bound, for every i, at
/// every t-degree in the window. A class that survives after localizing at
/// some x_i is a FAIL; one that needs a larger power is INCONCLUSIVE.
SupportCheck resolution_support_check(const std::vector<int>& weights, int rmin, int rmax, const Truncation& trunc,
                                      const std::optional<std::vector<std::string>>& sequence = std::nullopt);

enum class BlockKind { Pullback, Exceptional };

struct TwistBlock {
  BlockKind kind = BlockKind::Pullback;
  int r = 0;  // twist of an exceptional block
  GradedComplex representative;

  std::string label() const;
};

/// Blocks ordered Phi_{1-|d|}, ..., Phi_{-1}, Phi_0 on the blowup.
std::vector<TwistBlock> sod_blocks(const BlowupPresentation& blowup);

struct MatrixCell {
  std::size_t source = 0;  // block index of the Hom source
  std::size_t target = 0;
  bool diagonal = false;
  Verdict verdict = Verdict::Pass;
  DimTable dims;  // H^n of RHom at (0, k)
  std::optional<std::string> witness;
};

struct HomVanishingMatrix {
  std::vector<std::string> labels;
  std::vector<MatrixCell> cells;  // forbidden (later -> earlier) and diagonal cells
  Verdict verdict = Verdict::Pass;
};

HomVanishingMatrix hom_vanishing_matrix(const WeightedCentre& centre, const Truncation& trunc, int max_aux = 2);

struct TriangleCheck {
  int r = 0;
  Verdict verdict = Verdict::Pass;
  DimTable cone;     // hypercohomology of Cone(s: O(r+1) -> O(r)) at (0, k)
  DimTable divisor;  // H^i(E, O_E(r)) at (r, k)
};

/// Compares the cone of s : O(r+1) -> O(r) with R Gamma(E, O_E(r)).
TriangleCheck exceptional_triangle_check(const WeightedCentre& centre, int r, const Truncation& trunc,
                                         int max_aux = 2);

struct WitnessStep {
  std::string kind;  // "cone-s" or "koszul"
  int target = 0;
  std::vector<int> sources;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

struct GenerationWitness {
  int target = 0;
  std::vector<int> window;
  std::vector<WitnessStep> steps;
  Verdict verdict = Verdict::Pass;
  std::optional<std::size_t> failed_step;
};

/// O(s) on the blowup from O and the exceptional objects j_*O_E(r).
GenerationWitness generation_witness(const WeightedCentre& centre, int s, const Truncation& trunc, int max_aux = 2);

/// O(s) on P(weights) over Q from O(1-|d|), ..., O(0).
GenerationWitness generation_witness_proj(const std::vector<int>& weights, int s, const Truncation& trunc);

struct SODReport {
  std::vector<std::string> centre;
  int summand_count = 0;
  Verdict regularity = Verdict::Pass;
  std::optional<HomologyWitness> regularity_witness;
  Verdict pushforward = Verdict::Pass;
  HomVanishingMatrix matrix;
  std::vector<TriangleCheck> triangles;
  std::vector<GenerationWitness> witnesses;
  Verdict overall = Verdict::Pass;
};

SODReport sod_report(const WeightedCentre& centre, const Truncation& trunc, int max_aux = 2);

}  // namespace wblow
