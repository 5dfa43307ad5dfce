#include "wblow/cohomology.hpp"

#include "wblow/graded_piece.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wblow {

CohomologyTable cech_cohomology(const CechCover& cover, const std::vector<Degree>& degrees, const Truncation& trunc,
                                bool witnesses) {
  if (cover.charts.empty()) throw std::invalid_argument("Cech cover needs at least one chart");
  std::vector<int> ns;
  for (std::size_t i = 0; i < cover.charts.size(); ++i) ns.push_back(static_cast<int>(i));
  return hypercohomology(line_bundle(cover.ring, cover.twist), cover.charts, degrees, ns, trunc, witnesses);
}

namespace {

// #{a in Z^n, a_i >= lo : sum a_i w_i = target}.
long count_solutions(const std::vector<int>& w, int target, int lo) {
  long count = 0;
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rest) {
    if (i + 1 == w.size()) {
      if (rest >= static_cast<long>(lo) * w[i] && rest % w[i] == 0) ++count;
      return;
    }
    for (long a = lo; a * w[i] <= rest; ++a) rec(i + 1, rest - a * w[i]);
  };
  if (!w.empty()) rec(0, target);
  return count;
}

}  // namespace

std::vector<long> weighted_proj_cohomology_formula(const std::vector<int>& weights, int r) {
  return weighted_proj_cohomology_formula(weights, r, 1);
}

std::vector<long> weighted_proj_cohomology_formula(const std::vector<int>& weights, int r, long base_dim) {
  if (weights.empty()) throw std::invalid_argument("weights must be nonempty");
  for (int w : weights) {
    if (w < 1) throw std::invalid_argument("weights must be positive");
  }
  const std::size_t n = weights.size() - 1;
  std::vector<long> out(n + 1, 0);
  out[0] += base_dim * count_solutions(weights, r, 0);
  out[n] += base_dim * count_solutions(weights, -r, 1);
  return out;
}

GradedRing weighted_proj_ring(const GradedRing& base, const std::vector<int>& weights,
                              std::vector<std::size_t>& charts) {
  std::vector<Variable> vars = base.variables();
  std::vector<std::string> taken;
  for (const auto& v : vars) taken.push_back(v.name);
  charts.clear();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const std::string name = fresh_name("x_" + std::to_string(i), taken);
    taken.push_back(name);
    charts.push_back(vars.size());
    vars.push_back({name, weights[i], 0, false});
  }
  std::vector<Polynomial> rels;
  for (const auto& r : base.relations()) {
    Polynomial p(vars.size());
    for (const auto& [e, c] : r.terms()) {
      Exponents x(vars.size(), 0);
      std::copy(e.begin(), e.end(), x.begin());
      p.add_term(x, c);
    }
    rels.push_back(std::move(p));
  }
  return GradedRing(vars, std::move(rels));
}

CohomologyTable weighted_proj_cohomology_cech(const GradedRing& base, const std::vector<int>& weights, int r,
                                              const Truncation& trunc, const std::vector<int>& aux) {
  std::vector<std::size_t> charts;
  GradedRing ring = weighted_proj_ring(base, weights, charts);
  std::vector<Degree> degrees;
  for (int k : aux) degrees.push_back({r, k});
  return cech_cohomology({std::move(ring), charts, {}}, degrees, trunc);
}

CohomologyTable blowup_cohomology_cech(const BlowupPresentation& blowup, int r, const Truncation& trunc,
                                       const std::vector<int>& aux) {
  std::vector<Degree> degrees;
  for (int k : aux) degrees.push_back({r, k});
  return cech_cohomology({blowup.ring, blowup.u, {}}, degrees, trunc);
}

std::vector<int> aux_window(const BlowupPresentation& blowup, int r, int max_aux) {
  const int emax = *std::max_element(blowup.aux.begin(), blowup.aux.end());
  std::vector<int> out;
  for (int k = std::min(0, r * emax); k <= max_aux; ++k) out.push_back(k);
  return out;
}

SpectralResult blowup_cohomology_spectral(const WeightedCentre& centre, int r, const Truncation& trunc,
                                          const std::vector<int>& aux) {
  const BlowupPresentation bp = extended_rees_presentation(centre);
  const GradedRing ambient = bp.ambient();
  const std::size_t n = centre.size() - 1;
  const int nn = static_cast<int>(n);

  // Row q = 0: the deformed sequence over R[s, u].
  std::vector<SequenceEntry> deformed;
  for (std::size_t i = 0; i < centre.size(); ++i) {
    const auto& rel = bp.ring.relations()[bp.base_relations + i];
    deformed.push_back({rel, {0, centre.aux_degree(i)}});
  }
  GradedComplex row0 = koszul_complex(ambient, deformed);

  // Row q = n: the sequence f over R.
  std::vector<SequenceEntry> plain;
  for (std::size_t i = 0; i < centre.size(); ++i) {
    plain.push_back({centre.entries()[i].f, {0, centre.aux_degree(i)}});
  }
  GradedComplex rown = koszul_complex(centre.base(), plain);

  SpectralResult out{Verdict::Pass, {row0, rown, {}, {}}, {}};

  std::vector<Degree> row0_degrees;
  for (int k : aux) row0_degrees.push_back({r, k});
  const HomologyTable h0 = homology(row0, row0_degrees, trunc);

  // E_2^{0,n}: sum over mu = s^c / prod u_i^{a_i + 1} of t-degree r of the
  // R/(f) piece of aux degree k - aux(mu).
  std::map<int, std::vector<int>> base_aux_for;  // k -> aux degrees of R/(f) used
  std::set<int> needed;
  const auto w = centre.weights();
  for (int k : aux) {
    std::vector<int> a(w.size(), 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int weight, int auxsum) {
      if (i == w.size()) {
        const int c = -r - weight;
        if (c < 0) return;
        base_aux_for[k].push_back(k + auxsum);
        needed.insert(k + auxsum);
        return;
      }
      for (int ai = 0; weight + w[i] * (ai + 1) <= -r; ++ai) {
        rec(i + 1, weight + w[i] * (ai + 1), auxsum + centre.aux_degree(i) * (ai + 1));
      }
    };
    rec(0, 0, 0);
  }
  std::vector<Degree> rown_degrees;
  for (int k : needed) rown_degrees.push_back({0, k});
  const HomologyTable hn = homology(rown, rown_degrees, trunc);

  for (const auto& c : h0.cells) {
    if (c.index > 0) {
      out.rows.higher.cells.push_back(c);
      if (!c.dims.stable) {
        out.regularity = combine(out.regularity, Verdict::Inconclusive);
      } else if (c.dims.value() != 0) {
        out.regularity = Verdict::Fail;
      }
    }
  }
  for (const auto& c : hn.cells) {
    if (c.index > 0) {
      out.rows.higher.cells.push_back(c);
      if (!c.dims.stable) {
        out.regularity = combine(out.regularity, Verdict::Inconclusive);
      } else if (c.dims.value() != 0) {
        out.regularity = Verdict::Fail;
      }
    }
  }

  for (int k : aux) {
    const Degree d{r, k};
    const DimCell& e00 = h0.at(0, d);
    StabilizedDims en;
    en.stable = true;
    long total = 0;
    for (int bk : base_aux_for[k]) {
      const DimCell& c = hn.at(0, {0, bk});
      en.stable = en.stable && c.dims.stable;
      total += c.dims.value();
    }
    // The counting route does not depend on a bound.
    en.dim_at_bound = {{trunc.bound, total}, {trunc.bound + trunc.step, total}};
    out.rows.e2.cells.push_back({0, d, e00.dims, std::nullopt});
    out.rows.e2.cells.push_back({nn, d, en, std::nullopt});

    for (int i = 0; i <= nn; ++i) {
      StabilizedDims cell;
      long value = 0;
      bool stable = true;
      if (i == 0) {
        value += e00.dims.value();
        stable = stable && e00.dims.stable;
      }
      if (i == nn) {
        value += total;
        stable = stable && en.stable;
      }
      cell.dim_at_bound = {{trunc.bound, value}, {trunc.bound + trunc.step, value}};
      cell.stable = stable;
      out.table.cells.push_back({i, d, cell, std::nullopt});
    }
  }
  return out;
}

PushforwardResult pushforward_structure_check(const WeightedCentre& centre, const Truncation& trunc, int max_aux) {
  const BlowupPresentation bp = extended_rees_presentation(centre);
  std::vector<int> aux;
  for (int k = 0; k <= max_aux; ++k) aux.push_back(k);
  PushforwardResult out;
  out.blowup = blowup_cohomology_cech(bp, 0, trunc, aux);

  HypercohomologyEngine engine(line_bundle(bp.ring, {}), bp.u);
  const GradedRing& R = centre.base();
  for (int k : aux) {
    const Degree d{0, k};
    const GradedPieceBasis rk(R, {0, k}, std::nullopt);
    out.base_dims.push_back(static_cast<long>(rk.dim()));

    std::vector<Polynomial> sections;
    for (const auto& e : rk.basis()) {
      Exponents x(bp.ring.arity(), 0);
      std::copy(e.begin(), e.end(), x.begin());
      sections.push_back(Polynomial::monomial(x));
    }
    const DimCell& h0 = out.blowup.at(0, d);
    const int last = h0.dims.dim_at_bound.back().first;
    out.unit_rank.push_back(engine.section_rank(d, last, sections));

    for (const auto& c : out.blowup.cells) {
      if (c.degree != d) continue;
      if (!c.dims.stable) {
        out.verdict = combine(out.verdict, Verdict::Inconclusive);
        continue;
      }
      const long expected = c.index == 0 ? out.base_dims.back() : 0;
      if (c.dims.value() != expected) {
        out.verdict = Verdict::Fail;
        if (!out.witness) {
          out.witness = "H^" + std::to_string(c.index) + " at " + to_string(d) + " has dim " +
                        std::to_string(c.dims.value()) + ", expected " + std::to_string(expected);
        }
      }
    }
    if (out.unit_rank.back() != out.base_dims.back()) {
      out.verdict = Verdict::Fail;
      if (!out.witness) out.witness = "unit map not injective at " + to_string(d);
    }
  }
  return out;
}

}  // namespace wblow
