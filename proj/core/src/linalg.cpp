#include "wblow/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wblow {

using detail::IntRow;

SparseVector SparseVector::unit(Index i, const Rational& c) {
  SparseVector v;
  v.push_back(i, c);
  return v;
}

void SparseVector::push_back(Index i, Rational c) {
  if (c == 0) return;
  if (!entries_.empty() && entries_.back().first >= i) {
    throw std::invalid_argument("SparseVector::push_back: indices must increase");
  }
  entries_.emplace_back(i, std::move(c));
}

void SparseVector::add(Index i, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.emplace(it, i, c);
  }
}

Rational SparseVector::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  return (it != entries_.end() && it->first == i) ? it->second : Rational(0);
}

SparseVector& SparseVector::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.second *= c;
  }
  return *this;
}

LinearMap::LinearMap(std::size_t domain_dim, std::size_t codomain_dim)
    : codomain_dim_(codomain_dim), columns_(domain_dim) {}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Rational>>& rows,
                               std::size_t domain_dim) {
  LinearMap m(domain_dim, rows.size());
  for (std::size_t j = 0; j < domain_dim; ++j) {
    SparseVector col;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != domain_dim) throw std::invalid_argument("ragged matrix");
      col.push_back(static_cast<Index>(i), rows[i][j]);
    }
    m.columns_[j] = std::move(col);
  }
  return m;
}

void LinearMap::set_column(std::size_t j, SparseVector v) {
  if (!v.is_zero() && v.entries().back().first >= codomain_dim_) {
    throw std::out_of_range("column entry outside codomain");
  }
  columns_.at(j) = std::move(v);
}

SparseVector LinearMap::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, c] : v.entries()) {
    for (const auto& [i, a] : columns_.at(j).entries()) out.add(i, a * c);
  }
  return out;
}

namespace {

// Scales v to a primitive integer row; returns the scale factor used.
IntRow to_int_row(const SparseVector& v, Integer* scale = nullptr) {
  Integer lcm = 1;
  for (const auto& [i, c] : v.entries()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IntRow r;
  r.idx.reserve(v.size());
  r.val.reserve(v.size());
  for (const auto& [i, c] : v.entries()) {
    r.idx.push_back(i);
    r.val.push_back(c.get_num() * (lcm / c.get_den()));
  }
  if (scale) *scale = lcm;
  return r;
}

SparseVector to_sparse(const IntRow& r, const Integer& divisor) {
  SparseVector v;
  for (std::size_t k = 0; k < r.idx.size(); ++k) {
    v.push_back(r.idx[k], make_rational(r.val[k], divisor));
  }
  return v;
}

bool needs_content(const IntRow& r) {
  return std::any_of(r.val.begin(), r.val.end(),
                     [](const Integer& x) { return mpz_cmpabs_ui(x.get_mpz_t(), 1) > 0; });
}

// Divides r (and optionally a companion row) by the gcd of all entries.
void make_primitive(IntRow& r, IntRow* companion = nullptr) {
  if (!needs_content(r) && (!companion || !needs_content(*companion))) return;
  Integer g = 0;
  auto fold = [&](const IntRow& row) {
    for (const auto& x : row.val) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  };
  fold(r);
  if (companion && g != 1) fold(*companion);
  if (g == 0 || g == 1) return;
  for (auto& x : r.val) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  if (companion) {
    for (auto& x : companion->val) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// r <- a*r - b*p.
void combine(IntRow& r, const Integer& a, const IntRow& p, const Integer& b) {
  IntRow out;
  out.idx.reserve(r.idx.size() + p.idx.size());
  out.val.reserve(r.idx.size() + p.idx.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < r.idx.size() || j < p.idx.size()) {
    if (j == p.idx.size() || (i < r.idx.size() && r.idx[i] < p.idx[j])) {
      out.idx.push_back(r.idx[i]);
      out.val.push_back(a * r.val[i]);
      ++i;
    } else if (i == r.idx.size() || p.idx[j] < r.idx[i]) {
      out.idx.push_back(p.idx[j]);
      out.val.push_back(-b * p.val[j]);
      ++j;
    } else {
      t = a * r.val[i] - b * p.val[j];
      if (t != 0) {
        out.idx.push_back(r.idx[i]);
        out.val.push_back(t);
      }
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

void cofactors(const Integer& pivot_lead, const Integer& row_entry, Integer& a, Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), pivot_lead.get_mpz_t(), row_entry.get_mpz_t());
  a = pivot_lead / g;
  b = row_entry / g;
}

}  // namespace

const IntRow* RowEchelon::pivot_row(Index i) const {
  if (i >= pivot_of_.size() || pivot_of_[i] < 0) return nullptr;
  return &rows_[static_cast<std::size_t>(pivot_of_[i])];
}

bool RowEchelon::is_pivot(Index i) const { return pivot_row(i) != nullptr; }

std::optional<Index> RowEchelon::largest_pivot() const {
  for (std::size_t i = pivot_of_.size(); i-- > 0;) {
    if (pivot_of_[i] >= 0) return static_cast<Index>(i);
  }
  return std::nullopt;
}

void RowEchelon::reduce_leading(IntRow& r) const {
  Integer a, b;
  while (!r.empty()) {
    const IntRow* p = pivot_row(r.lead());
    if (!p) break;
    cofactors(p->lead_coeff(), r.lead_coeff(), a, b);
    combine(r, a, *p, b);
    make_primitive(r);
  }
}

bool RowEchelon::insert(const SparseVector& v) {
  IntRow r = to_int_row(v);
  reduce_leading(r);
  if (r.empty()) return false;
  make_primitive(r);
  const Index lead = r.lead();
  if (lead >= pivot_of_.size()) pivot_of_.resize(static_cast<std::size_t>(lead) + 1, -1);
  pivot_of_[lead] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

bool RowEchelon::contains(const SparseVector& v) const {
  IntRow r = to_int_row(v);
  reduce_leading(r);
  if (r.empty()) return true;
  // Leading entry is not a pivot; lower entries might still be, but any
  // combination of stored rows that cancels r must also cancel its lead.
  return false;
}

SparseVector RowEchelon::reduce(const SparseVector& v) const {
  Integer scale;
  IntRow r = to_int_row(v, &scale);
  Integer total = 1;  // r / total == v scaled by 1/scale, modulo the span
  Integer a, b;
  std::size_t k = r.idx.size();
  while (k > 0) {
    const Index i = r.idx[k - 1];
    const IntRow* p = pivot_row(i);
    if (!p) {
      --k;
      continue;
    }
    cofactors(p->lead_coeff(), r.val[k - 1], a, b);
    combine(r, a, *p, b);
    total *= a;
    k = static_cast<std::size_t>(std::lower_bound(r.idx.begin(), r.idx.end(), i) - r.idx.begin());
  }
  return to_sparse(r, total * scale);
}

std::size_t rank_of(const std::vector<SparseVector>& vectors) {
  RowEchelon e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns) {
  struct Tracked {
    IntRow row;
    IntRow tag;
  };
  std::vector<Tracked> stored;
  std::vector<std::int32_t> pivot_of;
  std::vector<SparseVector> kernel;
  Integer a, b;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Integer scale;
    Tracked t{to_int_row(columns[j], &scale), {}};
    t.tag.idx.push_back(static_cast<Index>(j));
    t.tag.val.push_back(scale);
    while (!t.row.empty()) {
      const Index lead = t.row.lead();
      if (lead >= pivot_of.size() || pivot_of[lead] < 0) break;
      const Tracked& p = stored[static_cast<std::size_t>(pivot_of[lead])];
      cofactors(p.row.lead_coeff(), t.row.lead_coeff(), a, b);
      combine(t.row, a, p.row, b);
      combine(t.tag, a, p.tag, b);
      make_primitive(t.row, &t.tag);
    }
    if (t.row.empty()) {
      make_primitive(t.tag);
      kernel.push_back(to_sparse(t.tag, 1));
    } else {
      const Index lead = t.row.lead();
      if (lead >= pivot_of.size()) pivot_of.resize(static_cast<std::size_t>(lead) + 1, -1);
      pivot_of[lead] = static_cast<std::int32_t>(stored.size());
      stored.push_back(std::move(t));
    }
  }
  return kernel;
}

RankKernelCokernel rank_kernel_cokernel(const LinearMap& map) {
  std::vector<SparseVector> columns;
  columns.reserve(map.domain_dim());
  for (std::size_t j = 0; j < map.domain_dim(); ++j) columns.push_back(map.column(j));

  RankKernelCokernel out;
  out.kernel = kernel_basis(columns);
  RowEchelon image;
  for (const auto& c : columns) image.insert(c);
  out.rank = image.rank();
  for (std::size_t i = 0; i < map.codomain_dim(); ++i) {
    if (!image.is_pivot(static_cast<Index>(i))) out.cokernel.push_back(SparseVector::unit(static_cast<Index>(i)));
  }
  return out;
}

}  // namespace wblow
