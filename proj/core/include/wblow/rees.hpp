#pragma once

#include "wblow/graded_piece.hpp"
#include "wblow/polynomial.hpp"
#include "wblow/total_complex.hpp"
#include "wblow/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wblow {

struct CentreEntry {
  Polynomial f;
  int weight = 1;
};

/// The data sum_i (f_i, d_i) over a base ring R.
///
/// R carries the auxiliary grading only: every base variable has degree
/// (0, 1) and each f_i must be homogeneous of positive auxiliary degree.
/// Entries are stably sorted by weight.
class WeightedCentre {
 public:
  WeightedCentre(GradedRing base, std::vector<CentreEntry> entries);

  const GradedRing& base() const { return base_; }
  const std::vector<CentreEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::vector<int> weights() const;
  int total_weight() const;
  /// Auxiliary degree of f_i.
  int aux_degree(std::size_t i) const { return aux_.at(i); }
  int max_aux_degree() const;

 private:
  GradedRing base_;
  std::vector<CentreEntry> entries_;
  std::vector<int> aux_;
};

/// Base ring with the given variable names, each of degree (0, 1).
GradedRing make_base_ring(const std::vector<std::string>& names, const std::vector<std::string>& relations = {});

struct ReesDegreeGenerators {
  int degree = 0;
  std::vector<Polynomial> generators;
  std::vector<std::vector<int>> exponents;  // a with generator = prod f_i^{a_i}
  Verdict pruning = Verdict::Pass;          // Inconclusive if a pruning test did not stabilize
};

/// Exponent vectors a, minimal for the condition sum a_i d_i >= degree.
std::vector<std::vector<int>> minimal_rees_exponents(const std::vector<int>& weights, int degree);

/// Generators of I_degree: products prod f_i^{a_i} over minimal a, with
/// generators lying in the ideal of the remaining ones removed.
ReesDegreeGenerators rees_generators(const WeightedCentre& centre, int degree, const Truncation& trunc = {});

/// A^ext = R[s, u_0..u_n] / (f_i - u_i s^{d_i}), with s of degree (-1, 0) and
/// u_i of degree (d_i, aux f_i). Variable order: base variables, s, u_i.
struct BlowupPresentation {
  GradedRing ring;
  std::size_t s = 0;
  std::vector<std::size_t> u;     // irrelevant locus V(u_0..u_n)
  std::vector<std::size_t> base;  // base variables inside `ring`
  std::vector<int> weights;
  std::vector<int> aux;  // aux degree of f_i
  std::size_t base_relations = 0;  // leading entries of ring.relations() that come from R

  /// R[s, u_0..u_n], keeping only the relations of R.
  GradedRing ambient() const;
  int total_weight() const;
};

BlowupPresentation extended_rees_presentation(const WeightedCentre& centre);

/// (R/(f_0..f_n))[u_0..u_n] with u_i of degree (d_i, aux f_i).
struct ExceptionalDivisorPresentation {
  GradedRing ring;
  std::vector<std::size_t> u;
  Verdict agreement = Verdict::Pass;
  // Per degree: index 0 is dim of the divisor ring piece, index 1 of A^ext/(s).
  DimTable dims;
};

/// Builds the divisor ring and compares its pieces with A^ext/(s) for
/// weights in [0, max_weight] and aux in [0, max_aux].
ExceptionalDivisorPresentation exceptional_divisor(const WeightedCentre& centre, int max_weight = 4,
                                                   int max_aux = 2, const Truncation& trunc = {});

/// A user-supplied generator of a Rees algebra presentation: name, image in
/// R[t] (polynomial text using base variables and `t`), and its degree.
struct PresentationGenerator {
  std::string name;
  std::string image;
  int degree = 1;

  friend bool operator==(const PresentationGenerator&, const PresentationGenerator&) = default;
};

struct PresentationCheck {
  Verdict verdict = Verdict::Pass;
  struct PerDegree {
    int degree = 0;
    Verdict verdict = Verdict::Pass;
    std::vector<std::string> generated;  // images of presentation products, in R
    std::vector<std::string> expected;   // rees_generators
    std::optional<Degree> first_difference;
  };
  std::vector<PerDegree> degrees;
};

/// Generators f_i t^j for 1 <= j <= d_i of the Rees algebra. The one with
/// j = d_i is named u_i, the others u_i[j].
std::vector<PresentationGenerator> canonical_presentation(const WeightedCentre& centre);

PresentationCheck verify_presentation_against_rees(const WeightedCentre& centre,
                                                   const std::vector<PresentationGenerator>& presentation,
                                                   int max_degree, const Truncation& trunc = {});

/// Returns `name` if unused in `taken`, else the first of name_1, name_2, ...
std::string fresh_name(const std::string& name, const std::vector<std::string>& taken);

}  // namespace wblow
