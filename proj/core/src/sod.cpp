#include "wblow/sod.hpp"

#include "wblow/graded_piece.hpp"
#include "wblow/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace wblow {

GradedComplex beilinson_resolution(const std::vector<int>& weights) {
  std::vector<std::size_t> charts;
  const GradedRing ring = weighted_proj_ring(GradedRing{}, weights, charts);
  std::vector<SequenceEntry> seq;
  for (std::size_t i = 0; i < weights.size(); ++i) seq.push_back({ring.variable(charts[i]), {weights[i], 0}});
  return koszul_complex(ring, seq);
}

namespace {

// C_j at degree D as a direct sum of exact ring pieces.
class ModulePiece {
 public:
  ModulePiece(const GradedRing& ring, const TwistedFreeModule& m, const Degree& d) {
    for (const auto& t : m.twists) {
      offset_.push_back(static_cast<Index>(dim_));
      parts_.push_back(std::make_unique<GradedPieceBasis>(ring, d + t, std::nullopt));
      dim_ += parts_.back()->dim();
    }
  }

  std::size_t dim() const { return dim_; }

  SparseVector coordinates(const std::vector<Polynomial>& v) const {
    SparseVector out;
    for (std::size_t r = 0; r < parts_.size(); ++r) {
      if (v[r].is_zero()) continue;
      const SparseVector local = parts_[r]->coordinates(v[r]);
      for (const auto& [i, c] : local.entries()) out.push_back(offset_[r] + i, c);
    }
    return out;
  }

  std::vector<Polynomial> element(const SparseVector& x, std::size_t arity) const {
    std::vector<Polynomial> out(parts_.size(), Polynomial(arity));
    for (std::size_t r = 0; r < parts_.size(); ++r) {
      const Index lo = offset_[r];
      const Index hi = lo + static_cast<Index>(parts_[r]->dim());
      SparseVector local;
      for (const auto& [i, c] : x.entries()) {
        if (i >= lo && i < hi) local.push_back(i - lo, c);
      }
      out[r] = parts_[r]->element(local);
    }
    return out;
  }

  // Images of the basis under d (target piece `to`).
  std::vector<SparseVector> image_of(const PolyMatrix& d, const ModulePiece& to, std::size_t arity) const {
    std::vector<SparseVector> cols;
    for (std::size_t c = 0; c < parts_.size(); ++c) {
      for (const auto& e : parts_[c]->basis()) {
        std::vector<Polynomial> v(d.rows(), Polynomial(arity));
        for (std::size_t r = 0; r < d.rows(); ++r) v[r] = d.at(r, c).times_monomial(e);
        cols.push_back(to.coordinates(v));
      }
    }
    return cols;
  }

 private:
  std::vector<std::unique_ptr<GradedPieceBasis>> parts_;
  std::vector<Index> offset_;
  std::size_t dim_ = 0;
};

std::string print_vector(const std::vector<Polynomial>& v, const GradedRing& ring) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += print_polynomial(v[i], ring);
  }
  return s + ")";
}

// Total-degree range of the Cech hypercohomology of c over `charts` charts.
std::vector<int> total_range(const GradedComplex& c, std::size_t charts) {
  const auto idx = c.indices();
  std::vector<int> ns;
  if (idx.empty()) return ns;
  const int top = static_cast<int>(charts == 0 ? 0 : charts - 1);
  for (int n = -idx.back(); n <= top - idx.front(); ++n) ns.push_back(n);
  return ns;
}

// Aux degrees k at which (0, k) can carry a class, capped at max_aux.
std::vector<int> aux_range(const GradedComplex& c, int emax, int max_aux) {
  int lo = 0;
  for (int k : c.indices()) {
    for (const auto& t : c.module(k).twists) lo = std::min(lo, emax * t.weight - t.aux);
  }
  std::vector<int> out;
  for (int k = lo; k <= max_aux; ++k) out.push_back(k);
  return out;
}

std::vector<Degree> at_weight_zero(const std::vector<int>& aux) {
  std::vector<Degree> out;
  for (int k : aux) out.push_back({0, k});
  return out;
}

long euler(const DimTable& t, const Degree& d) {
  long chi = 0;
  for (const auto& c : t.cells) {
    if (c.degree == d) chi += (c.index % 2 == 0 ? 1 : -1) * c.dims.value();
  }
  return chi;
}

Verdict stability(const DimTable& t) { return t.all_stable() ? Verdict::Pass : Verdict::Inconclusive; }

// A variety covered by the charts D(x_i) of Spec ring.
struct Space {
  GradedRing ring;
  std::vector<std::size_t> charts;
  std::vector<Degree> chart_degrees;
  int emax = 0;
  int max_aux = 0;
  Truncation trunc;
  std::map<Degree, DimTable> line_cache;

  DimTable hyper(const GradedComplex& c, const std::vector<int>& aux) const {
    return hypercohomology(c, charts, at_weight_zero(aux), total_range(c, charts.size()), trunc);
  }

  const DimTable& line(const Degree& twist, const std::vector<int>& aux) {
    auto it = line_cache.find(twist);
    if (it != line_cache.end()) {
      bool covered = true;
      for (int k : aux) {
        bool found = false;
        for (const auto& c : it->second.cells) found = found || c.degree == Degree{0, k};
        covered = covered && found;
      }
      if (covered) return it->second;
    }
    return line_cache[twist] = hyper(line_bundle(ring, twist), aux);
  }

  GradedComplex koszul_twisted(const Degree& t) const {
    std::vector<SequenceEntry> seq;
    for (std::size_t i = 0; i < charts.size(); ++i) seq.push_back({ring.variable(charts[i]), chart_degrees[i]});
    return twisted(koszul_complex(ring, seq), t);
  }
};

Space blowup_space(const BlowupPresentation& bp, const Truncation& trunc, int max_aux) {
  Space s{bp.ring, bp.u, {}, *std::max_element(bp.aux.begin(), bp.aux.end()), max_aux, trunc, {}};
  for (std::size_t i = 0; i < bp.u.size(); ++i) s.chart_degrees.push_back({bp.weights[i], bp.aux[i]});
  return s;
}

GradedRing divisor_base(const WeightedCentre& centre) {
  std::vector<Polynomial> rels = centre.base().relations();
  for (const auto& e : centre.entries()) rels.push_back(e.f);
  return centre.base().with_relations(std::move(rels));
}

// The Koszul complex of the chart variables, twisted so that O(m) sits at the
// end named by `top`: index 0 when false, the last index when true.
WitnessStep koszul_step(Space& sp, int m, bool top) {
  Degree total{};
  for (const auto& d : sp.chart_degrees) total += d;
  const Degree shift = top ? Degree{m, 0} + total : Degree{m, 0};
  const GradedComplex k = sp.koszul_twisted(shift);
  const int end = top ? static_cast<int>(sp.charts.size()) : 0;

  WitnessStep step{"koszul", m, {}, Verdict::Pass, {}};
  for (int j : k.indices()) {
    if (j == end) continue;
    for (const auto& t : k.module(j).twists) step.sources.push_back(t.weight);
  }
  std::sort(step.sources.begin(), step.sources.end());
  step.sources.erase(std::unique(step.sources.begin(), step.sources.end()), step.sources.end());

  const auto aux = aux_range(k, sp.emax, sp.max_aux);
  const DimTable h = sp.hyper(k, aux);
  step.verdict = stability(h);
  for (const auto& c : h.cells) {
    if (c.dims.stable && c.dims.value() != 0) {
      step.verdict = Verdict::Fail;
      step.detail = "twisted Koszul complex has H^" + std::to_string(c.index) + " at " + to_string(c.degree);
      return step;
    }
  }
  // chi of the end term against the alternating sum of the others.
  for (int a : aux) {
    const Degree d{0, a};
    long rest = 0;
    long target = 0;
    for (int j : k.indices()) {
      for (const auto& t : k.module(j).twists) {
        const DimTable& lt = sp.line(t, aux);
        const long chi = euler(lt, d);
        if (j == end) {
          target = chi;
        } else {
          rest += ((j - end) % 2 == 0 ? -1 : 1) * chi;
        }
        step.verdict = combine(step.verdict, stability(lt));
      }
    }
    if (target != rest) {
      step.verdict = Verdict::Fail;
      step.detail = "Euler characteristic mismatch at " + to_string(d);
      return step;
    }
  }
  step.detail = "exact twisted Koszul complex ending in O(" + std::to_string(m) + ")";
  return step;
}

GenerationWitness finish(GenerationWitness w) {
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    w.verdict = combine(w.verdict, w.steps[i].verdict);
    if (w.steps[i].verdict != Verdict::Pass && !w.failed_step) w.failed_step = i;
  }
  return w;
}

std::vector<int> window_of(int total_weight) {
  std::vector<int> w;
  for (int r = 1 - total_weight; r <= 0; ++r) w.push_back(r);
  return w;
}

}  // namespace

SupportCheck resolution_support_check(const std::vector<int>& weights, int rmin, int rmax, const Truncation& trunc,
                                      const std::optional<std::vector<std::string>>& sequence) {
  trunc.validate();
  std::vector<std::size_t> charts;
  const GradedRing ring = weighted_proj_ring(GradedRing{}, weights, charts);
  std::vector<SequenceEntry> seq;
  if (sequence) {
    for (const auto& text : *sequence) {
      Polynomial f = ring.parse(text);
      const auto d = ring.homogeneous_degree(f);
      if (!d) throw std::invalid_argument("sequence entry is not homogeneous: " + text);
      seq.push_back({std::move(f), *d});
    }
  } else {
    for (std::size_t i = 0; i < weights.size(); ++i) seq.push_back({ring.variable(charts[i]), {weights[i], 0}});
  }
  const GradedComplex k = koszul_complex(ring, seq);
  k.validate();

  SupportCheck out;
  std::vector<Degree> degrees;
  for (int r = rmin; r <= rmax; ++r) degrees.push_back({r, 0});
  out.homology = homology(k, degrees, trunc);

  const std::size_t arity = ring.arity();
  for (const auto& cell : out.homology.cells) {
    if (cell.dims.value() == 0) continue;
    const int j = cell.index;
    const Degree& d = cell.degree;
    const ModulePiece cj(ring, k.module(j), d);
    const ModulePiece cjm(ring, k.module(j - 1), d);
    const ModulePiece cjp(ring, k.module(j + 1), d);
    const auto cycles = kernel_basis(cj.image_of(k.differential(j), cjm, arity));
    RowEchelon span;
    for (const auto& b : cjp.image_of(k.differential(j + 1), cj, arity)) span.insert(b);
    std::vector<SparseVector> classes;
    for (const auto& z : cycles) {
      if (span.insert(z)) classes.push_back(z);
    }

    for (std::size_t i = 0; i < weights.size(); ++i) {
      int power = 0;
      for (int e = 1; e <= trunc.bound && power == 0; ++e) {
        const Degree de = d + Degree{e * weights[i], 0};
        const ModulePiece tj(ring, k.module(j), de);
        const ModulePiece tjp(ring, k.module(j + 1), de);
        RowEchelon img;
        for (const auto& b : tjp.image_of(k.differential(j + 1), tj, arity)) img.insert(b);
        Exponents xe(arity, 0);
        xe[charts[i]] = e;
        bool killed = true;
        for (const auto& z : classes) {
          auto v = cj.element(z, arity);
          for (auto& p : v) p = p.times_monomial(xe);
          killed = killed && img.contains(tj.coordinates(v));
        }
        if (killed) power = e;
      }
      out.annihilation.push_back({j, d, i, power});
      if (power != 0) continue;

      // Not killed up to the bound: does the class survive on D(x_i)?
      const DimTable loc = hypercohomology(k, {charts[i]}, {d}, {-j}, trunc);
      const auto& lc = loc.cells.front();
      if (lc.dims.stable && lc.dims.value() > 0) {
        out.verdict = Verdict::Fail;
        if (!out.witness) {
          out.witness = "H_" + std::to_string(j) + " at " + to_string(d) + ": class " +
                        print_vector(cj.element(classes.front(), arity), ring) + " is not killed by any power of " +
                        ring.variables()[charts[i]].name;
        }
      } else {
        out.verdict = combine(out.verdict, Verdict::Inconclusive);
      }
    }
  }
  return out;
}

std::string TwistBlock::label() const {
  return kind == BlockKind::Pullback ? "Phi_0" : "Phi_" + std::to_string(r);
}

std::vector<TwistBlock> sod_blocks(const BlowupPresentation& bp) {
  std::vector<TwistBlock> blocks;
  for (int r = 1 - bp.total_weight(); r <= -1; ++r) {
    blocks.push_back({BlockKind::Exceptional, r,
                      two_term(bp.ring, {r + 1, 0}, {r, 0}, bp.ring.variable(bp.s))});
  }
  blocks.push_back({BlockKind::Pullback, 0, line_bundle(bp.ring, {})});
  return blocks;
}

HomVanishingMatrix hom_vanishing_matrix(const WeightedCentre& centre, const Truncation& trunc, int max_aux) {
  trunc.validate();
  const BlowupPresentation bp = extended_rees_presentation(centre);
  Space sp = blowup_space(bp, trunc, max_aux);
  const auto blocks = sod_blocks(bp);
  const GradedRing quotient = divisor_base(centre);

  HomVanishingMatrix out;
  for (const auto& b : blocks) out.labels.push_back(b.label());

  for (std::size_t src = 0; src < blocks.size(); ++src) {
    for (std::size_t dst = 0; dst <= src; ++dst) {
      MatrixCell cell;
      cell.source = src;
      cell.target = dst;
      cell.diagonal = src == dst;
      const GradedComplex h = hom_complex(blocks[src].representative, blocks[dst].representative);
      const auto aux = aux_range(h, sp.emax, max_aux);
      cell.dims = sp.hyper(h, aux);
      cell.verdict = stability(cell.dims);
      for (const auto& c : cell.dims.cells) {
        if (!c.dims.stable) continue;
        long expected = 0;
        if (cell.diagonal && c.index == 0 && c.degree.aux >= 0) {
          const GradedRing& base = blocks[src].kind == BlockKind::Pullback ? centre.base() : quotient;
          expected = static_cast<long>(GradedPieceBasis(base, {0, c.degree.aux}, std::nullopt).dim());
        }
        if (c.dims.value() != expected) {
          cell.verdict = Verdict::Fail;
          if (!cell.witness) {
            cell.witness = "H^" + std::to_string(c.index) + " at " + to_string(c.degree) + " has dim " +
                           std::to_string(c.dims.value()) + ", expected " + std::to_string(expected);
          }
        }
      }
      out.verdict = combine(out.verdict, cell.verdict);
      out.cells.push_back(std::move(cell));
    }
  }
  return out;
}

TriangleCheck exceptional_triangle_check(const WeightedCentre& centre, int r, const Truncation& trunc,
                                         int max_aux) {
  trunc.validate();
  const BlowupPresentation bp = extended_rees_presentation(centre);
  Space sp = blowup_space(bp, trunc, max_aux);

  const GradedComplex a = line_bundle(bp.ring, {r + 1, 0});
  const GradedComplex b = line_bundle(bp.ring, {r, 0});
  ChainMap f{&a, &b, {}};
  PolyMatrix m(1, 1, bp.ring.arity());
  m.at(0, 0) = bp.ring.variable(bp.s);
  f.maps[0] = m;
  f.validate();
  const GradedComplex c = cone(f);

  TriangleCheck out;
  out.r = r;
  const auto aux = aux_range(c, sp.emax, max_aux);
  out.cone = sp.hyper(c, aux);

  const ExceptionalDivisorPresentation e = exceptional_divisor(centre, -1, -1, trunc);
  std::vector<Degree> degrees;
  for (int k : aux) degrees.push_back({r, k});
  out.divisor = cech_cohomology({e.ring, e.u, {}}, degrees, trunc);

  out.verdict = combine(stability(out.cone), stability(out.divisor));
  for (const auto& cc : out.cone.cells) {
    long expected = 0;
    const Degree dd{r, cc.degree.aux};
    for (const auto& ec : out.divisor.cells) {
      if (ec.index == cc.index && ec.degree == dd) expected = ec.dims.value();
    }
    if (cc.dims.stable && cc.dims.value() != expected) out.verdict = Verdict::Fail;
  }
  return out;
}

GenerationWitness generation_witness(const WeightedCentre& centre, int s, const Truncation& trunc, int max_aux) {
  trunc.validate();
  const BlowupPresentation bp = extended_rees_presentation(centre);
  Space sp = blowup_space(bp, trunc, max_aux);
  const int total = bp.total_weight();

  GenerationWitness w;
  w.target = s;
  w.window = window_of(total);

  const int lowest = std::max(s, 1 - total);
  for (int r = -1; r >= lowest; --r) {
    const TriangleCheck t = exceptional_triangle_check(centre, r, trunc, max_aux);
    WitnessStep step{"cone-s", r, {r + 1}, t.verdict, {}};
    step.detail = "Cone(s: O(" + std::to_string(r + 1) + ") -> O(" + std::to_string(r) + ")) = j_*O_E(" +
                  std::to_string(r) + ")";
    if (step.verdict == Verdict::Pass) {
      std::vector<int> aux;
      for (const auto& c : t.cone.cells) {
        if (aux.empty() || aux.back() != c.degree.aux) aux.push_back(c.degree.aux);
      }
      const DimTable& hs = sp.line({r + 1, 0}, aux);
      const DimTable& ht = sp.line({r, 0}, aux);
      step.verdict = combine(stability(hs), stability(ht));
      for (int k : aux) {
        const Degree d{0, k};
        if (euler(t.cone, d) != euler(ht, d) - euler(hs, d)) {
          step.verdict = Verdict::Fail;
          step.detail += "; Euler characteristic mismatch at " + to_string(d);
          break;
        }
      }
    }
    w.steps.push_back(std::move(step));
  }
  for (int m = 1; m <= s; ++m) w.steps.push_back(koszul_step(sp, m, false));
  for (int m = -total; m >= s; --m) w.steps.push_back(koszul_step(sp, m, true));
  return finish(std::move(w));
}

GenerationWitness generation_witness_proj(const std::vector<int>& weights, int s, const Truncation& trunc) {
  trunc.validate();
  Space sp{};
  sp.ring = weighted_proj_ring(GradedRing{}, weights, sp.charts);
  for (int d : weights) sp.chart_degrees.push_back({d, 0});
  sp.trunc = trunc;
  const int total = std::accumulate(weights.begin(), weights.end(), 0);

  GenerationWitness w;
  w.target = s;
  w.window = window_of(total);
  for (int m = 1; m <= s; ++m) w.steps.push_back(koszul_step(sp, m, false));
  for (int m = -total; m >= s; --m) w.steps.push_back(koszul_step(sp, m, true));
  return finish(std::move(w));
}

SODReport sod_report(const WeightedCentre& centre, const Truncation& trunc, int max_aux) {
  trunc.validate();
  const BlowupPresentation bp = extended_rees_presentation(centre);
  SODReport out;
  for (std::size_t i = 0; i < centre.size(); ++i) {
    out.centre.push_back("(" + print_polynomial(centre.entries()[i].f, centre.base()) + ", " +
                         std::to_string(centre.entries()[i].weight) + ")");
  }
  out.summand_count = centre.total_weight();

  // Regularity of f over R and of the deformed sequence over R[s, u].
  int aux_sum = 0;
  std::vector<SequenceEntry> plain;
  std::vector<SequenceEntry> deformed;
  for (std::size_t i = 0; i < centre.size(); ++i) {
    aux_sum += centre.aux_degree(i);
    plain.push_back({centre.entries()[i].f, {0, centre.aux_degree(i)}});
    deformed.push_back({bp.ring.relations()[bp.base_relations + i], {0, centre.aux_degree(i)}});
  }
  std::vector<Degree> base_degrees;
  for (int k = 0; k <= max_aux + aux_sum; ++k) base_degrees.push_back({0, k});
  const RegularityResult rb = koszul_regularity_check(centre.base(), plain, base_degrees, trunc);
  const int emax = centre.max_aux_degree();
  std::vector<Degree> def_degrees;
  for (int w = -out.summand_count - 1; w <= 1; ++w) {
    for (int k = std::min(0, w * emax); k <= max_aux; ++k) def_degrees.push_back({w, k});
  }
  const RegularityResult rd = koszul_regularity_check(bp.ambient(), deformed, def_degrees, trunc);
  out.regularity = combine(rb.verdict, rd.verdict);
  out.regularity_witness = rb.witness ? rb.witness : rd.witness;

  out.pushforward = pushforward_structure_check(centre, trunc, max_aux).verdict;
  out.matrix = hom_vanishing_matrix(centre, trunc, max_aux);
  for (int r = 1 - out.summand_count; r <= -1; ++r) {
    out.triangles.push_back(exceptional_triangle_check(centre, r, trunc, max_aux));
  }
  for (int s = -out.summand_count; s <= 1; ++s) {
    out.witnesses.push_back(generation_witness(centre, s, trunc, max_aux));
  }

  out.overall = combine(out.regularity, out.pushforward);
  out.overall = combine(out.overall, out.matrix.verdict);
  for (const auto& t : out.triangles) out.overall = combine(out.overall, t.verdict);
  for (const auto& w : out.witnesses) out.overall = combine(out.overall, w.verdict);
  return out;
}

}  // namespace wblow
