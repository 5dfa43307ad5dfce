#pragma once

// Sparse exact linear algebra over Q.
//
// Elimination runs on integer rows: rational inputs are scaled to integer
// vectors, rows are combined as a*r - b*p with a, b cofactors of the pivot
// coefficients, and every row is divided by its content afterwards. No
// rational arithmetic happens inside the elimination loop.

#include "wblow/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wblow {

using Index = std::uint32_t;

class SparseVector {
 public:
  using Entry = std::pair<Index, Rational>;

  SparseVector() = default;

  static SparseVector unit(Index i, const Rational& c = 1);

  /// Appends an entry; indices must be strictly increasing and c nonzero.
  void push_back(Index i, Rational c);
  /// Adds c at index i anywhere in the vector.
  void add(Index i, const Rational& c);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Rational at(Index i) const;

  SparseVector& operator*=(const Rational& c);
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Linear map stored by columns: column j is the image of domain basis vector j.
class LinearMap {
 public:
  LinearMap(std::size_t domain_dim, std::size_t codomain_dim);

  static LinearMap from_rows(const std::vector<std::vector<Rational>>& rows,
                             std::size_t domain_dim);

  std::size_t domain_dim() const { return columns_.size(); }
  std::size_t codomain_dim() const { return codomain_dim_; }
  void set_column(std::size_t j, SparseVector v);
  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  SparseVector apply(const SparseVector& v) const;

 private:
  std::size_t codomain_dim_;
  std::vector<SparseVector> columns_;
};

namespace detail {

struct IntRow {
  std::vector<Index> idx;
  std::vector<Integer> val;

  bool empty() const { return idx.empty(); }
  Index lead() const { return idx.back(); }
  const Integer& lead_coeff() const { return val.back(); }
};

}  // namespace detail

/// Incremental row-echelon basis of a subspace. The pivot of each stored row
/// is its largest index, so reduction eliminates high indices first.
class RowEchelon {
 public:
  RowEchelon() = default;

  /// Returns true when v was independent of the stored rows.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  /// Fully reduced representative of v modulo the span: no pivot index
  /// survives, and the result differs from v by an element of the span.
  SparseVector reduce(const SparseVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(Index i) const;
  std::optional<Index> largest_pivot() const;

 private:
  void reduce_leading(detail::IntRow& r) const;
  const detail::IntRow* pivot_row(Index i) const;

  std::vector<detail::IntRow> rows_;
  std::vector<std::int32_t> pivot_of_;
};

struct RankKernelCokernel {
  std::size_t rank = 0;
  /// Basis of the kernel, as vectors in the domain.
  std::vector<SparseVector> kernel;
  /// Codomain vectors whose classes form a basis of the cokernel.
  std::vector<SparseVector> cokernel;
};

RankKernelCokernel rank_kernel_cokernel(const LinearMap& map);

/// Rank of a set of vectors.
std::size_t rank_of(const std::vector<SparseVector>& vectors);

/// Kernel basis of the map whose columns are `columns`.
std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns);

}  // namespace wblow
