#pragma once

#include "wblow/linalg.hpp"
#include "wblow/polynomial.hpp"
#include "wblow/truncation.hpp"
#include "wblow/verdict.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace wblow {

/// Enumerates exponent vectors of a fixed degree inside a per-variable box,
/// in ascending lexicographic order.
std::vector<Exponents> enumerate_monomials(const GradedRing& ring, const Degree& degree,
                                           const std::vector<int>& lo, const std::vector<int>& hi);

/// Finite basis of one graded piece of a presented ring.
///
/// The ambient space is spanned by the monomials of the requested degree that
/// lie in the exponent window. The piece is that space modulo its
/// intersection with the span of {g*m : g a relation, m a windowed monomial}.
/// Basis elements are the lexicographically smallest representatives (the
/// monomials that are not leading terms of the relation span).
///
/// When the grading is pointed and the window covers every monomial of the
/// degree, the piece is exact and `truncation_active()` is false.
class GradedPieceBasis {
 public:
  /// Window semantics: exponents in [0, bound] ([-bound, bound] for
  /// invertible variables). A missing bound requests the exact piece, which
  /// needs a pointed grading.
  GradedPieceBasis(const GradedRing& ring, const Degree& degree, std::optional<int> bound);

  const Degree& degree() const { return degree_; }
  std::optional<int> bound() const { return bound_; }
  bool truncation_active() const { return active_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Exponents>& basis() const { return basis_; }

  /// Number of windowed monomials before quotienting.
  std::size_t ambient_dim() const { return inside_count_; }

  /// Coordinates of a homogeneous polynomial of this degree in the basis.
  /// Throws std::out_of_range if a term falls outside the window.
  SparseVector coordinates(const Polynomial& p) const;
  /// Coordinates of c * x^e.
  SparseVector monomial_coordinates(const Exponents& e) const;

  /// Polynomial represented by a coordinate vector.
  Polynomial element(const SparseVector& coords) const;

  bool contains_monomial(const Exponents& e) const;

 private:
  Degree degree_;
  std::optional<int> bound_;
  bool active_ = false;
  std::size_t arity_ = 0;
  std::size_t inside_count_ = 0;
  std::map<Exponents, Index> index_;
  std::vector<Index> basis_position_;  // ambient index -> basis slot, or npos
  std::vector<Exponents> basis_;
  RowEchelon relations_;

  mutable std::mutex cache_mutex_;
  mutable std::map<Index, SparseVector> cache_;
};

/// Graded piece under the window `trunc.bound`. Throws std::invalid_argument
/// when the bound is invalid or exceeds max_bound.
GradedPieceBasis graded_piece(const GradedRing& ring, const Degree& degree, const Truncation& trunc);

/// Per-degree outcome of an ideal comparison.
struct IdealDegreeComparison {
  Degree degree;
  long rank_a = 0;
  long rank_b = 0;
  long rank_union = 0;
  bool equal = false;
  bool stable = false;
};

struct IdealComparison {
  Verdict verdict = Verdict::Pass;  // Pass = equal, Fail = unequal
  std::vector<IdealDegreeComparison> degrees;
  std::optional<Degree> first_difference;
};

/// Compares the ideals generated by gens_a and gens_b (modulo the ring's
/// relations) in every degree whose level weight+aux lies in [0, max_level].
/// Each degree's spans {g*m} are compared under the truncation; a degree
/// whose ranks never stabilize makes the verdict Inconclusive.
IdealComparison ideal_equal_up_to_degree(const std::vector<Polynomial>& gens_a,
                                         const std::vector<Polynomial>& gens_b,
                                         const GradedRing& ring, int max_level,
                                         const Truncation& trunc);

/// True when every generator of `sub` lies in the ideal generated by `gens`.
IdealComparison ideal_contains(const std::vector<Polynomial>& gens,
                               const std::vector<Polynomial>& sub, const GradedRing& ring,
                               int max_level, const Truncation& trunc);

}  // namespace wblow
