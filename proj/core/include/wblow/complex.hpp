#pragma once

// Finite complexes of twisted free modules over a bigraded ring.
//
// Conventions (fixed everywhere in the library):
//   * complexes are homological: d_k maps C_k to C_{k-1};
//   * a differential matrix has one row per target summand and one column
//     per source summand;
//   * O(a) has its generator in degree -a, so an entry from a summand with
//     twist a to a summand with twist b is homogeneous of degree b - a;
//   * Hom_k(S, T) = prod_i Hom(S_i, T_{i+k}) with D(phi) = d_T phi - (-1)^k phi d_S;
//   * Cone(f: A -> B)_k = B_k (+) A_{k-1} with d = [[d_B, f], [0, -d_A]].

#include "wblow/polynomial.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wblow {

struct TwistedFreeModule {
  std::vector<Degree> twists;

  std::size_t rank() const { return twists.size(); }
  friend bool operator==(const TwistedFreeModule&, const TwistedFreeModule&) = default;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  bool is_zero() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix operator-() const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t arity_ = 0;
  std::vector<Polynomial> entries_;
};

/// Thrown when a matrix entry has the wrong degree or d^2 != 0.
class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GradedComplex {
 public:
  explicit GradedComplex(std::shared_ptr<const GradedRing> ring);
  explicit GradedComplex(const GradedRing& ring);

  const GradedRing& ring() const { return *ring_; }
  const std::shared_ptr<const GradedRing>& ring_ptr() const { return ring_; }

  void set_module(int k, TwistedFreeModule m);
  /// d_k : C_k -> C_{k-1}. Dimensions must match the modules already set.
  void set_differential(int k, PolyMatrix d);

  /// Zero module when index k is unset.
  const TwistedFreeModule& module(int k) const;
  /// Zero matrix of the right shape when unset.
  PolyMatrix differential(int k) const;

  /// Indices carrying a nonzero module, ascending.
  std::vector<int> indices() const;

  /// Throws ComplexError on an inhomogeneous entry or on d_{k-1} d_k != 0.
  void validate() const;

 private:
  std::shared_ptr<const GradedRing> ring_;
  std::map<int, TwistedFreeModule> modules_;
  std::map<int, PolyMatrix> differentials_;
};

/// Componentwise maps f_k : A_k -> B_k.
struct ChainMap {
  const GradedComplex* source = nullptr;
  const GradedComplex* target = nullptr;
  std::map<int, PolyMatrix> maps;

  PolyMatrix at(int k) const;
  /// Throws ComplexError unless every f_k is homogeneous and d_B f = f d_A.
  void validate() const;
};

/// True when p is zero in the ring (exact test in its homogeneous degree).
bool is_zero_in_ring(const Polynomial& p, const GradedRing& ring);

/// One entry of a regular-sequence candidate: f with its degree.
struct SequenceEntry {
  Polynomial f;
  Degree degree;
};

/// Koszul complex: C_k has basis e_S over k-subsets S (lex order), e_S of twist
/// -sum_{j in S} deg f_j, and d(e_S) = sum_j (-1)^{pos of j in S} f_j e_{S-j}.
GradedComplex koszul_complex(const GradedRing& ring, const std::vector<SequenceEntry>& sequence);

/// The k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

GradedComplex hom_complex(const GradedComplex& source, const GradedComplex& target);

GradedComplex cone(const ChainMap& f);

/// Single line bundle O(twist) placed in index k.
GradedComplex line_bundle(const GradedRing& ring, const Degree& twist, int k = 0);

/// Two-term complex O(a) -> O(b) by multiplication with f, in indices 1 and 0.
GradedComplex two_term(const GradedRing& ring, const Degree& a, const Degree& b, const Polynomial& f);

/// The complex shifted so that C'_k = C_{k-shift}, with differentials negated
/// for odd shifts.
GradedComplex shifted(const GradedComplex& c, int shift);

/// Tensor with O(t): every twist moves by t, matrices unchanged.
GradedComplex twisted(const GradedComplex& c, const Degree& t);

std::string describe(const GradedComplex& c);

}  // namespace wblow
