#include "wblow/graded_piece.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace wblow {

namespace {

constexpr Index kNoSlot = std::numeric_limits<Index>::max();

struct Range {
  long lo = 0;
  long hi = 0;
};

void enumerate_rec(const GradedRing& ring, const Degree& target, const std::vector<int>& lo,
                   const std::vector<int>& hi, const std::vector<Range>& wsuffix,
                   const std::vector<Range>& asuffix, std::size_t i, long w, long a, Exponents& cur,
                   std::vector<Exponents>& out) {
  const std::size_t n = ring.arity();
  if (i == n) {
    if (w == target.weight && a == target.aux) out.push_back(cur);
    return;
  }
  const auto& v = ring.variables()[i];
  for (int e = lo[i]; e <= hi[i]; ++e) {
    const long w2 = w + static_cast<long>(e) * v.weight;
    const long a2 = a + static_cast<long>(e) * v.aux_weight;
    const long wr = target.weight - w2;
    const long ar = target.aux - a2;
    if (wr < wsuffix[i + 1].lo || wr > wsuffix[i + 1].hi) continue;
    if (ar < asuffix[i + 1].lo || ar > asuffix[i + 1].hi) continue;
    cur[i] = e;
    enumerate_rec(ring, target, lo, hi, wsuffix, asuffix, i + 1, w2, a2, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Exponents> enumerate_monomials(const GradedRing& ring, const Degree& degree,
                                           const std::vector<int>& lo, const std::vector<int>& hi) {
  const std::size_t n = ring.arity();
  std::vector<Range> wsuffix(n + 1), asuffix(n + 1);
  for (std::size_t i = n; i-- > 0;) {
    const auto& v = ring.variables()[i];
    const long w1 = static_cast<long>(lo[i]) * v.weight, w2 = static_cast<long>(hi[i]) * v.weight;
    const long a1 = static_cast<long>(lo[i]) * v.aux_weight, a2 = static_cast<long>(hi[i]) * v.aux_weight;
    wsuffix[i] = {wsuffix[i + 1].lo + std::min(w1, w2), wsuffix[i + 1].hi + std::max(w1, w2)};
    asuffix[i] = {asuffix[i + 1].lo + std::min(a1, a2), asuffix[i + 1].hi + std::max(a1, a2)};
  }
  std::vector<Exponents> out;
  if (degree.weight < wsuffix[0].lo || degree.weight > wsuffix[0].hi) return out;
  if (degree.aux < asuffix[0].lo || degree.aux > asuffix[0].hi) return out;
  Exponents cur(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] > hi[i]) return out;
  }
  enumerate_rec(ring, degree, lo, hi, wsuffix, asuffix, 0, 0, 0, cur, out);
  return out;
}

namespace {

// Exponent box for a degree: exact caps when the grading is pointed, clipped
// by the bound when one is given. Sets `active` when the bound cuts anything.
void exponent_box(const GradedRing& ring, const Degree& degree, std::optional<int> bound,
                  std::vector<int>& lo, std::vector<int>& hi, bool& active) {
  const std::size_t n = ring.arity();
  lo.assign(n, 0);
  hi.assign(n, 0);
  active = false;
  if (!bound && !ring.is_pointed()) {
    throw std::invalid_argument("exact graded piece requested for a non-pointed grading");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = ring.variables()[i];
    const auto cap = ring.exponent_cap(i, degree);
    if (bound) {
      lo[i] = v.invertible ? -*bound : 0;
      hi[i] = *bound;
      if (!cap || *cap > *bound || v.invertible) active = true;
      if (cap && *cap < hi[i]) hi[i] = std::max(*cap, -1);
    } else {
      hi[i] = std::max(*cap, -1);
    }
  }
}

}  // namespace

GradedPieceBasis::GradedPieceBasis(const GradedRing& ring, const Degree& degree,
                                   std::optional<int> bound)
    : degree_(degree), bound_(bound), arity_(ring.arity()) {
  std::vector<int> lo, hi;
  exponent_box(ring, degree, bound, lo, hi, active_);
  std::vector<Exponents> inside = enumerate_monomials(ring, degree, lo, hi);
  inside_count_ = inside.size();
  for (std::size_t k = 0; k < inside.size(); ++k) index_.emplace(inside[k], static_cast<Index>(k));

  // Relation products g*m; monomials of a product that leave the window get
  // indices above every windowed monomial, so they are eliminated first.
  std::vector<Polynomial> products;
  for (const auto& g : ring.relations()) {
    const auto gdeg = ring.homogeneous_degree(g);
    if (!gdeg) continue;
    const Degree mdeg = degree - *gdeg;
    std::vector<int> mlo, mhi;
    bool unused = false;
    exponent_box(ring, mdeg, bound, mlo, mhi, unused);
    for (const auto& m : enumerate_monomials(ring, mdeg, mlo, mhi)) products.push_back(g.times_monomial(m));
  }
  std::set<Exponents> outside;
  for (const auto& p : products) {
    for (const auto& [e, c] : p.terms()) {
      if (!index_.count(e)) outside.insert(e);
    }
  }
  Index next = static_cast<Index>(inside.size());
  for (const auto& e : outside) index_.emplace(e, next++);

  for (const auto& p : products) {
    SparseVector v;
    std::vector<std::pair<Index, Rational>> entries;
    entries.reserve(p.size());
    for (const auto& [e, c] : p.terms()) entries.emplace_back(index_.at(e), c);
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [i, c] : entries) v.push_back(i, std::move(c));
    relations_.insert(v);
  }

  basis_position_.assign(inside.size(), kNoSlot);
  for (std::size_t k = 0; k < inside.size(); ++k) {
    if (!relations_.is_pivot(static_cast<Index>(k))) {
      basis_position_[k] = static_cast<Index>(basis_.size());
      basis_.push_back(inside[k]);
    }
  }
}

bool GradedPieceBasis::contains_monomial(const Exponents& e) const {
  auto it = index_.find(e);
  return it != index_.end() && it->second < inside_count_;
}

SparseVector GradedPieceBasis::monomial_coordinates(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end() || it->second >= inside_count_) {
    throw std::out_of_range("monomial outside the graded piece window");
  }
  const Index k = it->second;
  if (basis_position_[k] != kNoSlot) return SparseVector::unit(basis_position_[k]);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto c = cache_.find(k); c != cache_.end()) return c->second;
  }
  const SparseVector nf = relations_.reduce(SparseVector::unit(k));
  SparseVector coords;
  for (const auto& [i, c] : nf.entries()) coords.push_back(basis_position_.at(i), c);
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(k, coords);
  return coords;
}

SparseVector GradedPieceBasis::coordinates(const Polynomial& p) const {
  SparseVector out;
  for (const auto& [e, c] : p.terms()) {
    const SparseVector v = monomial_coordinates(e);
    for (const auto& [i, a] : v.entries()) out.add(i, a * c);
  }
  return out;
}

Polynomial GradedPieceBasis::element(const SparseVector& coords) const {
  Polynomial p(arity_);
  for (const auto& [i, c] : coords.entries()) p.add_term(basis_.at(i), c);
  return p;
}

GradedPieceBasis graded_piece(const GradedRing& ring, const Degree& degree, const Truncation& trunc) {
  trunc.validate();
  return GradedPieceBasis(ring, degree, trunc.bound);
}

void Truncation::validate() const {
  if (bound < 1) throw std::invalid_argument("truncation bound must be positive");
  if (step < 1) throw std::invalid_argument("truncation step must be positive");
  if (bound > max_bound) throw std::invalid_argument("truncation bound exceeds max_bound");
}

std::vector<StabilizedDims> stabilize(const Truncation& trunc, std::size_t cells,
                                      const std::function<BoundEvaluation(int)>& eval) {
  trunc.validate();
  std::vector<StabilizedDims> out(cells);
  for (int b = trunc.bound; b <= trunc.max_bound; b += trunc.step) {
    BoundEvaluation ev = eval(b);
    if (ev.dims.size() != cells) throw std::logic_error("stabilize: cell count changed");
    for (std::size_t c = 0; c < cells; ++c) out[c].dim_at_bound.emplace_back(b, ev.dims[c]);
    if (!ev.truncation_active) {
      for (std::size_t c = 0; c < cells; ++c) out[c].dim_at_bound.emplace_back(b + trunc.step, ev.dims[c]);
      break;
    }
    bool all = out[0].dim_at_bound.size() >= 2;
    for (std::size_t c = 0; c < cells && all; ++c) {
      const auto& d = out[c].dim_at_bound;
      all = d[d.size() - 1].second == d[d.size() - 2].second;
    }
    if (cells == 0 || all) break;
  }
  for (auto& s : out) {
    const auto& d = s.dim_at_bound;
    s.stable = d.size() >= 2 && d[d.size() - 1].second == d[d.size() - 2].second;
  }
  return out;
}

namespace {

// Degrees with level (weight + aux) in [0, max_level] that carry monomials.
std::vector<Degree> degrees_up_to_level(const GradedRing& ring, int max_level) {
  std::set<Degree> found;
  const std::size_t n = ring.arity();
  for (const auto& v : ring.variables()) {
    if (v.weight + v.aux_weight <= 0) {
      throw std::invalid_argument("ideal comparison needs every variable to have positive weight+aux");
    }
  }
  // Enumerate exponent vectors with level <= max_level.
  Exponents cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int level) {
    if (i == n) {
      found.insert(ring.degree_of(cur));
      return;
    }
    const auto& v = ring.variables()[i];
    const int unit = v.weight + v.aux_weight;
    for (int e = 0; level + e * unit <= max_level; ++e) {
      cur[i] = e;
      rec(i + 1, level + e * unit);
    }
    cur[i] = 0;
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

struct SpanRanks {
  long a = 0, b = 0, u = 0;
  bool active = false;
};

// Ranks of ideal spans in one degree, modulo the ring relations.
SpanRanks span_ranks(const std::vector<Polynomial>& gens_a, const std::vector<Polynomial>& gens_b,
                     const GradedRing& ring, const Degree& d, int bound) {
  GradedPieceBasis piece(ring, d, bound);
  SpanRanks r;
  r.active = piece.truncation_active();
  auto collect = [&](const std::vector<Polynomial>& gens) {
    std::vector<SparseVector> vecs;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      const auto gd = ring.homogeneous_degree(g);
      if (!gd) throw std::invalid_argument("ideal generator is not homogeneous");
      const Degree md = d - *gd;
      std::vector<int> lo(ring.arity(), 0), hi(ring.arity(), bound);
      for (std::size_t i = 0; i < ring.arity(); ++i) {
        if (ring.variables()[i].invertible) lo[i] = -bound;
      }
      for (const auto& m : enumerate_monomials(ring, md, lo, hi)) {
        const Polynomial p = g.times_monomial(m);
        bool inside = std::all_of(p.terms().begin(), p.terms().end(),
                                  [&](const auto& t) { return piece.contains_monomial(t.first); });
        if (inside) vecs.push_back(piece.coordinates(p));
      }
    }
    return vecs;
  };
  auto va = collect(gens_a);
  auto vb = collect(gens_b);
  r.a = static_cast<long>(rank_of(va));
  r.b = static_cast<long>(rank_of(vb));
  va.insert(va.end(), vb.begin(), vb.end());
  r.u = static_cast<long>(rank_of(va));
  return r;
}

IdealComparison compare_ideals(const std::vector<Polynomial>& gens_a,
                               const std::vector<Polynomial>& gens_b, const GradedRing& ring,
                               int max_level, const Truncation& trunc, bool containment_only) {
  trunc.validate();
  IdealComparison out;
  for (const Degree& d : degrees_up_to_level(ring, max_level)) {
    auto dims = stabilize(trunc, 3, [&](int b) {
      SpanRanks r = span_ranks(gens_a, gens_b, ring, d, b);
      return BoundEvaluation{{r.a, r.b, r.u}, r.active};
    });
    IdealDegreeComparison c;
    c.degree = d;
    c.rank_a = dims[0].value();
    c.rank_b = dims[1].value();
    c.rank_union = dims[2].value();
    c.stable = dims[0].stable && dims[1].stable && dims[2].stable;
    c.equal = containment_only ? c.rank_union == c.rank_a
                               : (c.rank_a == c.rank_union && c.rank_b == c.rank_union);
    if (!c.stable) {
      out.verdict = combine(out.verdict, Verdict::Inconclusive);
    } else if (!c.equal) {
      out.verdict = Verdict::Fail;
      if (!out.first_difference) out.first_difference = d;
    }
    out.degrees.push_back(c);
  }
  return out;
}

}  // namespace

IdealComparison ideal_equal_up_to_degree(const std::vector<Polynomial>& gens_a,
                                         const std::vector<Polynomial>& gens_b,
                                         const GradedRing& ring, int max_level,
                                         const Truncation& trunc) {
  return compare_ideals(gens_a, gens_b, ring, max_level, trunc, false);
}

IdealComparison ideal_contains(const std::vector<Polynomial>& gens,
                               const std::vector<Polynomial>& sub, const GradedRing& ring,
                               int max_level, const Truncation& trunc) {
  return compare_ideals(gens, sub, ring, max_level, trunc, true);
}

}  // namespace wblow
