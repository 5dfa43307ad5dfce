#include "wblow/complex.hpp"

#include "wblow/graded_piece.hpp"

#include <sstream>

namespace wblow {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
    : rows_(rows), cols_(cols), arity_(arity), entries_(rows * cols, Polynomial(arity)) {}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix out(a.rows_, b.cols_, std::max(a.arity_, b.arity_));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Polynomial& y = b.at(k, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& p : out.entries_) p = -p;
  return out;
}

bool is_zero_in_ring(const Polynomial& p, const GradedRing& ring) {
  if (p.is_zero()) return true;
  if (ring.relations().empty()) return false;
  const auto d = ring.homogeneous_degree(p);
  if (!d) return false;
  return GradedPieceBasis(ring, *d, std::nullopt).coordinates(p).is_zero();
}

namespace {

// Every nonzero entry from twist a (column) to twist b (row) has degree b - a.
void check_entries(const GradedRing& ring, const PolyMatrix& m, const TwistedFreeModule& src,
                   const TwistedFreeModule& tgt, const std::string& what) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Polynomial& p = m.at(i, j);
      if (p.is_zero()) continue;
      if (!ring.is_homogeneous(p, tgt.twists[i] - src.twists[j])) {
        throw ComplexError(what + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") = " + print_polynomial(p, ring) + " is not homogeneous of degree " +
                           to_string(tgt.twists[i] - src.twists[j]));
      }
    }
  }
}

void require_zero(const GradedRing& ring, const PolyMatrix& m, const std::string& what) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_zero_in_ring(m.at(i, j), ring)) {
        throw ComplexError(what + " fails at entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

const TwistedFreeModule kZeroModule{};

}  // namespace

GradedComplex::GradedComplex(std::shared_ptr<const GradedRing> ring) : ring_(std::move(ring)) {}
GradedComplex::GradedComplex(const GradedRing& ring) : ring_(std::make_shared<const GradedRing>(ring)) {}

void GradedComplex::set_module(int k, TwistedFreeModule m) {
  if (m.rank() == 0) {
    modules_.erase(k);
  } else {
    modules_[k] = std::move(m);
  }
}

void GradedComplex::set_differential(int k, PolyMatrix d) {
  if (d.rows() != module(k - 1).rank() || d.cols() != module(k).rank()) {
    throw ComplexError("differential d_" + std::to_string(k) + " has the wrong shape");
  }
  differentials_[k] = std::move(d);
}

const TwistedFreeModule& GradedComplex::module(int k) const {
  auto it = modules_.find(k);
  return it == modules_.end() ? kZeroModule : it->second;
}

PolyMatrix GradedComplex::differential(int k) const {
  auto it = differentials_.find(k);
  if (it != differentials_.end()) return it->second;
  return PolyMatrix(module(k - 1).rank(), module(k).rank(), ring_->arity());
}

std::vector<int> GradedComplex::indices() const {
  std::vector<int> out;
  for (const auto& [k, m] : modules_) out.push_back(k);
  return out;
}

void GradedComplex::validate() const {
  for (const auto& [k, d] : differentials_) {
    if (d.rows() != module(k - 1).rank() || d.cols() != module(k).rank()) {
      throw ComplexError("differential d_" + std::to_string(k) + " has the wrong shape");
    }
    check_entries(*ring_, d, module(k), module(k - 1), "d_" + std::to_string(k));
  }
  for (const auto& [k, d] : differentials_) {
    auto next = differentials_.find(k - 1);
    if (next == differentials_.end()) continue;
    require_zero(*ring_, next->second * d, "d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " = 0");
  }
}

PolyMatrix ChainMap::at(int k) const {
  auto it = maps.find(k);
  if (it != maps.end()) return it->second;
  return PolyMatrix(target->module(k).rank(), source->module(k).rank(), source->ring().arity());
}

void ChainMap::validate() const {
  if (!source || !target) throw ComplexError("chain map without source or target");
  if (!(source->ring() == target->ring())) throw ComplexError("chain map between different rings");
  std::vector<int> ks = source->indices();
  for (int k : target->indices()) ks.push_back(k);
  for (const auto& [k, m] : maps) {
    if (m.rows() != target->module(k).rank() || m.cols() != source->module(k).rank()) {
      throw ComplexError("chain map component f_" + std::to_string(k) + " has the wrong shape");
    }
    check_entries(source->ring(), m, source->module(k), target->module(k), "f_" + std::to_string(k));
  }
  for (int k : ks) {
    const PolyMatrix lhs = target->differential(k) * at(k);
    const PolyMatrix rhs = at(k - 1) * source->differential(k);
    require_zero(source->ring(), lhs - rhs, "chain map condition at index " + std::to_string(k));
  }
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

GradedComplex koszul_complex(const GradedRing& ring, const std::vector<SequenceEntry>& sequence) {
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto& e = sequence[i];
    if (!e.f.is_zero() && !ring.is_homogeneous(e.f, e.degree)) {
      throw ComplexError("sequence entry " + std::to_string(i) + " (" + print_polynomial(e.f, ring) +
                         ") is not homogeneous of degree " + to_string(e.degree));
    }
  }
  GradedComplex c(ring);
  const int n = static_cast<int>(sequence.size());
  std::vector<std::vector<std::vector<int>>> bases;
  for (int k = 0; k <= n; ++k) {
    bases.push_back(subsets_of_size(n, k));
    TwistedFreeModule m;
    for (const auto& s : bases.back()) {
      Degree t;
      for (int j : s) t = t - sequence[static_cast<std::size_t>(j)].degree;
      m.twists.push_back(t);
    }
    c.set_module(k, std::move(m));
  }
  for (int k = 1; k <= n; ++k) {
    const auto& src = bases[static_cast<std::size_t>(k)];
    const auto& tgt = bases[static_cast<std::size_t>(k - 1)];
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t i = 0; i < tgt.size(); ++i) row_of[tgt[i]] = i;
    PolyMatrix d(tgt.size(), src.size(), ring.arity());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& s = src[col];
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + static_cast<long>(pos));
        const Polynomial& f = sequence[static_cast<std::size_t>(s[pos])].f;
        d.at(row_of.at(rest), col) = (pos % 2 == 0) ? f : -f;
      }
    }
    c.set_differential(k, std::move(d));
  }
  return c;
}

GradedComplex hom_complex(const GradedComplex& source, const GradedComplex& target) {
  if (!(source.ring() == target.ring())) throw ComplexError("hom_complex: ring mismatch");
  const std::size_t arity = source.ring().arity();
  const std::vector<int> si = source.indices(), ti = target.indices();
  GradedComplex out(source.ring_ptr());
  if (si.empty() || ti.empty()) return out;

  // Basis of Hom_k: triples (i, p, q) meaning E_pq : S_i -> T_{i+k}, p in T, q in S.
  struct Elem {
    int i;
    std::size_t p, q;
  };
  const int kmin = ti.front() - si.back(), kmax = ti.back() - si.front();
  std::map<int, std::vector<Elem>> basis;
  for (int k = kmin; k <= kmax; ++k) {
    TwistedFreeModule m;
    auto& b = basis[k];
    for (int i : si) {
      const auto& S = source.module(i);
      const auto& T = target.module(i + k);
      for (std::size_t p = 0; p < T.rank(); ++p) {
        for (std::size_t q = 0; q < S.rank(); ++q) {
          b.push_back({i, p, q});
          m.twists.push_back(T.twists[p] - S.twists[q]);
        }
      }
    }
    out.set_module(k, std::move(m));
  }
  auto position = [&](int k, int i, std::size_t p, std::size_t q) {
    const auto& b = basis.at(k);
    for (std::size_t r = 0; r < b.size(); ++r) {
      if (b[r].i == i && b[r].p == p && b[r].q == q) return r;
    }
    throw std::logic_error("hom_complex: basis element not found");
  };
  for (int k = kmin + 1; k <= kmax; ++k) {
    const auto& src = basis.at(k);
    const auto& tgt = basis.at(k - 1);
    if (src.empty() || tgt.empty()) continue;
    PolyMatrix d(tgt.size(), src.size(), arity);
    const bool odd = (k % 2) != 0;
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto [i, p, q] = src[col];
      // d_T o E_pq: sum_{p'} (d_T)_{p' p} E_{p' q}, in Hom(S_i, T_{i+k-1}).
      const PolyMatrix dT = target.differential(i + k);
      for (std::size_t p2 = 0; p2 < dT.rows(); ++p2) {
        const Polynomial& e = dT.at(p2, p);
        if (!e.is_zero()) d.at(position(k - 1, i, p2, q), col) += e;
      }
      // -(-1)^k E_pq o d_S: sum_{q'} (d_S)_{q q'} E_{p q'}, in Hom(S_{i+1}, T_{i+k}).
      const PolyMatrix dS = source.differential(i + 1);
      for (std::size_t q2 = 0; q2 < dS.cols(); ++q2) {
        const Polynomial& e = dS.at(q, q2);
        if (e.is_zero()) continue;
        d.at(position(k - 1, i + 1, p, q2), col) += odd ? e : -e;
      }
    }
    out.set_differential(k, std::move(d));
  }
  return out;
}

GradedComplex cone(const ChainMap& f) {
  f.validate();
  const GradedComplex& A = *f.source;
  const GradedComplex& B = *f.target;
  const std::size_t arity = A.ring().arity();
  GradedComplex out(A.ring_ptr());
  std::vector<int> ks = B.indices();
  for (int k : A.indices()) ks.push_back(k + 1);
  if (ks.empty()) return out;
  const int lo = *std::min_element(ks.begin(), ks.end());
  const int hi = *std::max_element(ks.begin(), ks.end());
  for (int k = lo; k <= hi; ++k) {
    TwistedFreeModule m = B.module(k);
    const auto& a = A.module(k - 1).twists;
    m.twists.insert(m.twists.end(), a.begin(), a.end());
    out.set_module(k, std::move(m));
  }
  for (int k = lo + 1; k <= hi; ++k) {
    const std::size_t bk = B.module(k).rank(), ak = A.module(k - 1).rank();
    const std::size_t bk1 = B.module(k - 1).rank(), ak1 = A.module(k - 2).rank();
    if (bk + ak == 0 || bk1 + ak1 == 0) continue;
    PolyMatrix d(bk1 + ak1, bk + ak, arity);
    const PolyMatrix dB = B.differential(k);
    const PolyMatrix fk = f.at(k - 1);
    const PolyMatrix dA = A.differential(k - 1);
    for (std::size_t i = 0; i < bk1; ++i) {
      for (std::size_t j = 0; j < bk; ++j) d.at(i, j) = dB.at(i, j);
      for (std::size_t j = 0; j < ak; ++j) d.at(i, bk + j) = fk.at(i, j);
    }
    for (std::size_t i = 0; i < ak1; ++i) {
      for (std::size_t j = 0; j < ak; ++j) d.at(bk1 + i, bk + j) = -dA.at(i, j);
    }
    out.set_differential(k, std::move(d));
  }
  return out;
}

GradedComplex line_bundle(const GradedRing& ring, const Degree& twist, int k) {
  GradedComplex c(ring);
  c.set_module(k, {{twist}});
  return c;
}

GradedComplex two_term(const GradedRing& ring, const Degree& a, const Degree& b, const Polynomial& f) {
  GradedComplex c(ring);
  c.set_module(1, {{a}});
  c.set_module(0, {{b}});
  PolyMatrix d(1, 1, ring.arity());
  d.at(0, 0) = f;
  c.set_differential(1, std::move(d));
  return c;
}

GradedComplex shifted(const GradedComplex& c, int shift) {
  GradedComplex out(c.ring_ptr());
  for (int k : c.indices()) out.set_module(k + shift, c.module(k));
  for (int k : c.indices()) {
    if (c.module(k - 1).rank() == 0) continue;
    PolyMatrix d = c.differential(k);
    out.set_differential(k + shift, (shift % 2 == 0) ? d : -d);
  }
  return out;
}

GradedComplex twisted(const GradedComplex& c, const Degree& t) {
  GradedComplex out(c.ring_ptr());
  for (int k : c.indices()) {
    TwistedFreeModule m = c.module(k);
    for (auto& x : m.twists) x = x + t;
    out.set_module(k, std::move(m));
  }
  for (int k : c.indices()) {
    if (c.module(k - 1).rank() == 0) continue;
    out.set_differential(k, c.differential(k));
  }
  return out;
}

std::string describe(const GradedComplex& c) {
  std::ostringstream os;
  bool first = true;
  for (int k : c.indices()) {
    if (!first) os << "; ";
    first = false;
    os << k << ":";
    for (const auto& t : c.module(k).twists) os << " O" << to_string(t);
  }
  return os.str();
}

}  // namespace wblow
