#include "wblow/total_complex.hpp"

#include "wblow/graded_piece.hpp"
#include "wblow/parallel.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace wblow {

namespace {

std::atomic<int> g_threads{1};

}  // namespace

void set_thread_count(int n) { g_threads.store(std::max(1, n)); }
int thread_count() { return g_threads.load(); }

bool DimTable::all_stable() const {
  return std::all_of(cells.begin(), cells.end(), [](const DimCell& c) { return c.dims.stable; });
}

const DimCell& DimTable::at(int index, const Degree& degree) const {
  for (const auto& c : cells) {
    if (c.index == index && c.degree == degree) return c;
  }
  throw std::out_of_range("no cell H" + std::to_string(index) + " at " + to_string(degree));
}

struct HypercohomologyEngine::Impl {
  GradedComplex complex;
  std::vector<std::size_t> charts;
  std::vector<std::vector<std::vector<int>>> levels;  // levels[p] = chart subsets of size p+1
  int kmin = 0, kmax = -1;

  mutable std::mutex mutex;
  mutable std::map<Degree, std::shared_ptr<const GradedPieceBasis>> pieces;

  struct Component {
    int p = 0;
    const std::vector<int>* sigma = nullptr;
    int k = 0;
    std::size_t j = 0;
    std::shared_ptr<const GradedPieceBasis> piece;
    Index offset = 0;
  };
  using Key = std::tuple<std::vector<int>, int, std::size_t>;

  Impl(const GradedComplex& c, std::vector<std::size_t> chart_vars)
      : complex(c), charts(std::move(chart_vars)) {
    if (!complex.ring().is_pointed()) {
      throw std::invalid_argument("hypercohomology needs a pointed grading on the ring");
    }
    for (std::size_t v : charts) {
      if (v >= complex.ring().arity()) throw std::invalid_argument("chart variable out of range");
    }
    if (charts.empty()) {
      levels.push_back({{}});
    } else {
      const int n = static_cast<int>(charts.size());
      for (int p = 0; p < n; ++p) levels.push_back(subsets_of_size(n, p + 1));
    }
    const auto idx = complex.indices();
    if (!idx.empty()) {
      kmin = idx.front();
      kmax = idx.back();
    }
  }

  std::shared_ptr<const GradedPieceBasis> piece(const Degree& d) const {
    {
      std::lock_guard lock(mutex);
      if (auto it = pieces.find(d); it != pieces.end()) return it->second;
    }
    auto made = std::make_shared<const GradedPieceBasis>(complex.ring(), d, std::nullopt);
    std::lock_guard lock(mutex);
    return pieces.emplace(d, std::move(made)).first->second;
  }

  Degree sigma_shift(const std::vector<int>& sigma, int bound) const {
    Degree s;
    for (int c : sigma) s = s + bound * complex.ring().variables()[charts[static_cast<std::size_t>(c)]].degree();
    return s;
  }

  std::vector<Component> components(const Degree& d, int bound, int n, Index& total) const {
    std::vector<Component> out;
    total = 0;
    for (int p = 0; p < static_cast<int>(levels.size()); ++p) {
      const int k = p - n;
      const auto& m = complex.module(k);
      if (m.rank() == 0) continue;
      for (const auto& sigma : levels[static_cast<std::size_t>(p)]) {
        const Degree shift = sigma_shift(sigma, bound);
        for (std::size_t j = 0; j < m.rank(); ++j) {
          Component c{p, &sigma, k, j, piece(d + m.twists[j] + shift), total};
          total += static_cast<Index>(c.piece->dim());
          out.push_back(std::move(c));
        }
      }
    }
    return out;
  }

  // Columns of the total differential C^n -> C^{n+1}.
  std::vector<SparseVector> columns(const std::vector<Component>& src, const std::vector<Component>& tgt,
                                    int bound) const {
    std::map<Key, const Component*> lookup;
    for (const auto& c : tgt) lookup.emplace(Key{*c.sigma, c.k, c.j}, &c);
    const std::size_t nch = charts.size();
    std::vector<SparseVector> cols;
    for (const auto& c : src) {
      const PolyMatrix dk = complex.differential(c.k);
      for (const auto& mono : c.piece->basis()) {
        SparseVector col;
        auto add_into = [&](const Component& t, const SparseVector& v, const Rational& sign) {
          for (const auto& [i, a] : v.entries()) col.add(t.offset + i, a * sign);
        };
        // Cech part.
        for (std::size_t m = 0; m < nch; ++m) {
          const int mi = static_cast<int>(m);
          if (std::find(c.sigma->begin(), c.sigma->end(), mi) != c.sigma->end()) continue;
          std::vector<int> tau = *c.sigma;
          auto pos = std::lower_bound(tau.begin(), tau.end(), mi);
          const long position = pos - tau.begin();
          tau.insert(pos, mi);
          auto it = lookup.find(Key{tau, c.k, c.j});
          if (it == lookup.end()) continue;
          Exponents e = mono;
          e[charts[m]] += bound;
          add_into(*it->second, it->second->piece->monomial_coordinates(e), position % 2 == 0 ? 1 : -1);
        }
        // Complex part.
        const Rational sign = c.p % 2 == 0 ? 1 : -1;
        for (std::size_t r = 0; r < dk.rows(); ++r) {
          const Polynomial& entry = dk.at(r, c.j);
          if (entry.is_zero()) continue;
          auto it = lookup.find(Key{*c.sigma, c.k - 1, r});
          if (it == lookup.end()) continue;
          add_into(*it->second, it->second->piece->coordinates(entry.times_monomial(mono)), sign);
        }
        cols.push_back(std::move(col));
      }
    }
    return cols;
  }

  std::string describe_vector(const std::vector<Component>& comps, const SparseVector& v, int bound) const {
    const GradedRing& ring = complex.ring();
    std::ostringstream os;
    bool first = true;
    for (const auto& c : comps) {
      SparseVector part;
      for (const auto& [i, a] : v.entries()) {
        if (i >= c.offset && i < c.offset + c.piece->dim()) part.push_back(i - c.offset, a);
      }
      if (part.is_zero()) continue;
      if (!first) os << "; ";
      first = false;
      os << "C_" << c.k << "[" << c.j << "]";
      if (!charts.empty()) {
        os << " on D(";
        for (std::size_t t = 0; t < c.sigma->size(); ++t) {
          if (t) os << ",";
          os << ring.variables()[charts[static_cast<std::size_t>((*c.sigma)[t])]].name;
        }
        os << ")";
      }
      os << ": (" << print_polynomial(c.piece->element(part), ring) << ")";
      if (!charts.empty() && bound > 0) {
        os << "/(";
        for (std::size_t t = 0; t < c.sigma->size(); ++t) {
          if (t) os << "*";
          os << ring.variables()[charts[static_cast<std::size_t>((*c.sigma)[t])]].name;
        }
        os << ")^" << bound;
      }
    }
    return os.str();
  }
};

HypercohomologyEngine::HypercohomologyEngine(const GradedComplex& complex, std::vector<std::size_t> chart_vars)
    : impl_(new Impl(complex, std::move(chart_vars))) {}

HypercohomologyEngine::~HypercohomologyEngine() { delete impl_; }

int HypercohomologyEngine::min_total_degree() const { return -impl_->kmax; }
int HypercohomologyEngine::max_total_degree() const {
  return static_cast<int>(impl_->levels.size()) - 1 - impl_->kmin;
}

HyperEvaluation HypercohomologyEngine::evaluate(const Degree& degree, int bound, const std::vector<int>& ns,
                                                bool witnesses) const {
  const Impl& m = *impl_;
  const int b = m.charts.empty() ? 0 : bound;
  HyperEvaluation out;
  out.truncation_active = !m.charts.empty();

  std::map<int, std::vector<Impl::Component>> comps;
  std::map<int, Index> dims;
  auto comps_at = [&](int n) -> const std::vector<Impl::Component>& {
    auto it = comps.find(n);
    if (it == comps.end()) {
      Index total = 0;
      auto c = m.components(degree, b, n, total);
      dims[n] = total;
      it = comps.emplace(n, std::move(c)).first;
    }
    return it->second;
  };
  std::map<int, std::vector<SparseVector>> cols;
  auto cols_at = [&](int n) -> const std::vector<SparseVector>& {
    auto it = cols.find(n);
    if (it == cols.end()) it = cols.emplace(n, m.columns(comps_at(n), comps_at(n + 1), b)).first;
    return it->second;
  };
  std::map<int, std::size_t> ranks;
  auto rank_at = [&](int n) {
    auto it = ranks.find(n);
    if (it != ranks.end()) return it->second;
    comps_at(n);
    const std::size_t r = dims[n] == 0 ? 0 : rank_of(cols_at(n));
    ranks[n] = r;
    return r;
  };

  for (int n : ns) {
    comps_at(n);
    const long h = static_cast<long>(dims[n]) - static_cast<long>(rank_at(n)) - static_cast<long>(rank_at(n - 1));
    out.dims[n] = h;
    if (witnesses && h > 0) {
      RowEchelon image;
      for (const auto& c : cols_at(n - 1)) image.insert(c);
      for (const auto& z : kernel_basis(cols_at(n))) {
        if (!image.contains(z)) {
          out.witnesses[n] = m.describe_vector(comps_at(n), z, b);
          break;
        }
      }
    }
  }
  return out;
}

int HypercohomologyEngine::minimum_bound(const Degree& degree) const {
  const Impl& m = *impl_;
  if (m.charts.empty()) return 0;
  std::vector<long> w;
  long total = 0;
  for (std::size_t c : m.charts) {
    const long wi = m.complex.ring().variables()[c].weight;
    if (wi <= 0) return 0;
    w.push_back(wi);
    total += wi;
  }
  long best = 1;
  for (int k : m.complex.indices()) {
    for (const auto& a : m.complex.module(k).twists) {
      const long r = static_cast<long>(degree.weight) + a.weight;
      for (long wi : w) {
        const long num = -r - (total - wi);
        if (num > 0) best = std::max(best, num / wi);
      }
    }
  }
  return static_cast<int>(best);
}

long HypercohomologyEngine::section_rank(const Degree& degree, int bound,
                                        const std::vector<Polynomial>& sections) const {
  const Impl& m = *impl_;
  const auto& m0 = m.complex.module(0);
  if (m0.rank() != 1 || m0.twists[0] != Degree{}) throw std::invalid_argument("section_rank needs O in index 0");
  const int b = m.charts.empty() ? 0 : bound;
  Index dim0 = 0, dimm = 0;
  const auto c0 = m.components(degree, b, 0, dim0);
  const auto cm = m.components(degree, b, -1, dimm);
  RowEchelon span;
  if (dimm > 0) {
    for (const auto& c : m.columns(cm, c0, b)) span.insert(c);
  }
  const std::size_t base = span.rank();
  for (const auto& g : sections) {
    SparseVector v;
    for (const auto& c : c0) {
      if (c.k != 0 || c.j != 0) continue;
      Exponents shift(m.complex.ring().arity(), 0);
      for (int i : *c.sigma) shift[m.charts[static_cast<std::size_t>(i)]] += b;
      const SparseVector part = c.piece->coordinates(g.times_monomial(shift));
      for (const auto& [i, a] : part.entries()) v.add(c.offset + i, a);
    }
    span.insert(v);
  }
  return static_cast<long>(span.rank() - base);
}

DimTable hypercohomology(const GradedComplex& complex, const std::vector<std::size_t>& chart_vars,
                         const std::vector<Degree>& degrees, const std::vector<int>& ns, const Truncation& trunc,
                         bool witnesses) {
  trunc.validate();
  HypercohomologyEngine engine(complex, chart_vars);
  std::vector<std::vector<DimCell>> per_degree(degrees.size());
  parallel_for(degrees.size(), thread_count(), [&](std::size_t t) {
    const Degree& d = degrees[t];
    auto eval = [&](int b) {
      HyperEvaluation ev = engine.evaluate(d, b, ns);
      BoundEvaluation be;
      be.truncation_active = ev.truncation_active;
      for (int n : ns) be.dims.push_back(ev.dims.at(n));
      return be;
    };
    Truncation start = trunc;
    const int floor = engine.minimum_bound(d);
    std::vector<StabilizedDims> stab;
    if (floor > trunc.max_bound) {
      const BoundEvaluation be = eval(trunc.max_bound);
      for (long v : be.dims) stab.push_back({{{trunc.max_bound, v}}, false});
    } else {
      start.bound = std::max(trunc.bound, floor);
      stab = stabilize(start, ns.size(), eval);
    }
    std::vector<DimCell> cells;
    for (std::size_t i = 0; i < ns.size(); ++i) cells.push_back({ns[i], d, stab[i], std::nullopt});
    if (witnesses) {
      std::vector<int> want;
      for (const auto& c : cells) {
        if (c.dims.stable && c.dims.value() > 0) want.push_back(c.index);
      }
      if (!want.empty()) {
        const int last = cells.front().dims.dim_at_bound.back().first;
        HyperEvaluation ev = engine.evaluate(d, last, want, true);
        for (auto& c : cells) {
          if (auto it = ev.witnesses.find(c.index); it != ev.witnesses.end()) c.witness = it->second;
        }
      }
    }
    per_degree[t] = std::move(cells);
  });
  DimTable table;
  for (auto& v : per_degree) {
    for (auto& c : v) table.cells.push_back(std::move(c));
  }
  return table;
}

}  // namespace wblow
