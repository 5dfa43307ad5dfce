#include "wblow/rees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace wblow {

WeightedCentre::WeightedCentre(GradedRing base, std::vector<CentreEntry> entries)
    : base_(std::move(base)), entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("centre must have at least one entry");
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const CentreEntry& a, const CentreEntry& b) { return a.weight < b.weight; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.weight < 1) throw std::invalid_argument("centre weights must be positive");
    if (e.f.arity() != base_.arity()) throw std::invalid_argument("centre polynomial arity mismatch");
    const auto d = base_.homogeneous_degree(e.f);
    if (!d || d->weight != 0 || d->aux <= 0) {
      throw std::invalid_argument("centre polynomial " + print_polynomial(e.f, base_) +
                                  " must be homogeneous and non-constant");
    }
    aux_.push_back(d->aux);
  }
}

std::vector<int> WeightedCentre::weights() const {
  std::vector<int> w;
  for (const auto& e : entries_) w.push_back(e.weight);
  return w;
}

int WeightedCentre::total_weight() const {
  int t = 0;
  for (const auto& e : entries_) t += e.weight;
  return t;
}

int WeightedCentre::max_aux_degree() const { return *std::max_element(aux_.begin(), aux_.end()); }

GradedRing make_base_ring(const std::vector<std::string>& names, const std::vector<std::string>& relations) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back({n, 0, 1, false});
  GradedRing free(vars);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(free.parse(r));
  return free.with_relations(std::move(rels));
}

std::vector<std::vector<int>> minimal_rees_exponents(const std::vector<int>& weights, int degree) {
  if (degree < 1) throw std::invalid_argument("Rees degree must be positive");
  const std::size_t n = weights.size();
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
    if (i == n) {
      if (sum < degree) return;
      for (std::size_t j = 0; j < n; ++j) {
        if (a[j] > 0 && sum - weights[j] >= degree) return;
      }
      out.push_back(a);
      return;
    }
    const int cap = (degree + weights[i] - 1) / weights[i];
    for (int e = 0; e <= cap; ++e) {
      a[i] = e;
      rec(i + 1, sum + e * weights[i]);
    }
    a[i] = 0;
  };
  rec(0, 0);
  // Descending lex: high powers of the low-weight-index entries first.
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

Polynomial product_of_powers(const WeightedCentre& c, const std::vector<int>& a) {
  Polynomial p = c.base().one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) p = p * c.entries()[i].f.pow(static_cast<unsigned>(a[i]));
  }
  return p;
}

int aux_of(const GradedRing& ring, const Polynomial& p) {
  const auto d = ring.homogeneous_degree(p);
  return d ? d->aux : 0;
}

// Verdict::Pass if g lies in the ideal of gens, Fail if not.
Verdict member(const std::vector<Polynomial>& gens, const Polynomial& g, const GradedRing& ring,
               const Truncation& trunc) {
  if (gens.empty()) return g.is_zero() ? Verdict::Pass : Verdict::Fail;
  return ideal_contains(gens, {g}, ring, aux_of(ring, g), trunc).verdict;
}

}  // namespace

ReesDegreeGenerators rees_generators(const WeightedCentre& centre, int degree, const Truncation& trunc) {
  ReesDegreeGenerators out;
  out.degree = degree;
  for (const auto& a : minimal_rees_exponents(centre.weights(), degree)) {
    Polynomial p = product_of_powers(centre, a);
    if (is_zero_in_ring(p, centre.base())) continue;
    out.generators.push_back(std::move(p));
    out.exponents.push_back(a);
  }
  // Greedy pruning in enumeration order.
  for (std::size_t i = 0; i < out.generators.size();) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < out.generators.size(); ++j) {
      if (j != i) others.push_back(out.generators[j]);
    }
    const Verdict v = member(others, out.generators[i], centre.base(), trunc);
    if (v == Verdict::Pass) {
      out.generators.erase(out.generators.begin() + static_cast<long>(i));
      out.exponents.erase(out.exponents.begin() + static_cast<long>(i));
      continue;
    }
    out.pruning = combine(out.pruning, v == Verdict::Inconclusive ? Verdict::Inconclusive : Verdict::Pass);
    ++i;
  }
  return out;
}

std::string fresh_name(const std::string& name, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& n) { return std::find(taken.begin(), taken.end(), n) != taken.end(); };
  if (!used(name)) return name;
  for (int k = 1;; ++k) {
    std::string cand = name + "_" + std::to_string(k);
    if (!used(cand)) return cand;
  }
}

namespace {

// Copies p from a ring whose variables are a prefix of the target ring.
Polynomial embed(const Polynomial& p, std::size_t arity) {
  Polynomial out(arity);
  for (const auto& [e, c] : p.terms()) {
    Exponents x(arity, 0);
    std::copy(e.begin(), e.end(), x.begin());
    out.add_term(x, c);
  }
  return out;
}

struct ExtendedVariables {
  std::vector<Variable> vars;
  std::size_t s = 0;
  std::vector<std::size_t> u;
};

ExtendedVariables extended_variables(const WeightedCentre& c, bool with_s) {
  ExtendedVariables out;
  out.vars = c.base().variables();
  std::vector<std::string> taken;
  for (const auto& v : out.vars) taken.push_back(v.name);
  if (with_s) {
    out.s = out.vars.size();
    const std::string s = fresh_name("s", taken);
    taken.push_back(s);
    out.vars.push_back({s, -1, 0, false});
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::string u = fresh_name("u_" + std::to_string(i), taken);
    taken.push_back(u);
    out.u.push_back(out.vars.size());
    out.vars.push_back({u, c.entries()[i].weight, c.aux_degree(i), false});
  }
  return out;
}

}  // namespace

BlowupPresentation extended_rees_presentation(const WeightedCentre& centre) {
  ExtendedVariables ev = extended_variables(centre, true);
  const std::size_t n = ev.vars.size();
  std::vector<Polynomial> rels;
  for (const auto& r : centre.base().relations()) rels.push_back(embed(r, n));
  for (std::size_t i = 0; i < centre.size(); ++i) {
    Exponents e(n, 0);
    e[ev.u[i]] = 1;
    e[ev.s] = centre.entries()[i].weight;
    rels.push_back(embed(centre.entries()[i].f, n) - Polynomial::monomial(e));
  }
  BlowupPresentation out{GradedRing(ev.vars, std::move(rels)), ev.s, ev.u, {}, centre.weights(), {}};
  for (std::size_t i = 0; i < centre.base().arity(); ++i) out.base.push_back(i);
  for (std::size_t i = 0; i < centre.size(); ++i) out.aux.push_back(centre.aux_degree(i));
  out.base_relations = centre.base().relations().size();
  return out;
}

GradedRing BlowupPresentation::ambient() const {
  const auto& rels = ring.relations();
  return ring.with_relations({rels.begin(), rels.begin() + static_cast<long>(base_relations)});
}

int BlowupPresentation::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0); }

ExceptionalDivisorPresentation exceptional_divisor(const WeightedCentre& centre, int max_weight, int max_aux,
                                                   const Truncation& trunc) {
  ExtendedVariables ev = extended_variables(centre, false);
  const std::size_t n = ev.vars.size();
  std::vector<Polynomial> rels;
  for (const auto& r : centre.base().relations()) rels.push_back(embed(r, n));
  for (const auto& e : centre.entries()) rels.push_back(embed(e.f, n));
  ExceptionalDivisorPresentation out{GradedRing(ev.vars, std::move(rels)), ev.u, Verdict::Pass, {}};

  const BlowupPresentation bp = extended_rees_presentation(centre);
  std::vector<Polynomial> qrels = bp.ring.relations();
  qrels.push_back(bp.ring.variable(bp.s));
  const GradedRing quotient = bp.ring.with_relations(std::move(qrels));

  for (int w = 0; w <= max_weight; ++w) {
    for (int a = 0; a <= max_aux; ++a) {
      const Degree d{w, a};
      auto dims = stabilize(trunc, 2, [&](int) {
        return BoundEvaluation{{static_cast<long>(GradedPieceBasis(out.ring, d, std::nullopt).dim()),
                                static_cast<long>(GradedPieceBasis(quotient, d, std::nullopt).dim())},
                               false};
      });
      if (!dims[0].stable || !dims[1].stable) {
        out.agreement = combine(out.agreement, Verdict::Inconclusive);
      } else if (dims[0].value() != dims[1].value()) {
        out.agreement = Verdict::Fail;
      }
      out.dims.cells.push_back({0, d, dims[0], std::nullopt});
      out.dims.cells.push_back({1, d, dims[1], std::nullopt});
    }
  }
  return out;
}

std::vector<PresentationGenerator> canonical_presentation(const WeightedCentre& centre) {
  std::vector<Variable> vars = centre.base().variables();
  std::vector<std::string> taken;
  for (const auto& v : vars) taken.push_back(v.name);
  vars.push_back({fresh_name("t", taken), 1, 0, false});
  const GradedRing rt(vars);
  std::vector<PresentationGenerator> out;
  const BlowupPresentation bp = extended_rees_presentation(centre);
  for (std::size_t i = 0; i < centre.size(); ++i) {
    const int d = centre.entries()[i].weight;
    const std::string& name = bp.ring.variables()[bp.u[i]].name;
    for (int j = 1; j <= d; ++j) {
      Exponents t(vars.size(), 0);
      t.back() = j;
      const Polynomial img = embed(centre.entries()[i].f, vars.size()).times_monomial(t);
      out.push_back({j == d ? name : name + "[" + std::to_string(j) + "]", print_polynomial(img, rt), j});
    }
  }
  return out;
}

PresentationCheck verify_presentation_against_rees(const WeightedCentre& centre,
                                                   const std::vector<PresentationGenerator>& presentation,
                                                   int max_degree, const Truncation& trunc) {
  const GradedRing& R = centre.base();
  std::vector<Variable> vars = R.variables();
  std::vector<std::string> taken;
  for (const auto& v : vars) taken.push_back(v.name);
  const std::string tname = fresh_name("t", taken);
  vars.push_back({tname, 1, 0, false});
  const GradedRing rt(vars);
  const std::size_t ti = vars.size() - 1;

  // R-parts of the images.
  std::vector<Polynomial> parts;
  std::vector<int> degs;
  for (const auto& g : presentation) {
    if (g.degree < 1) throw std::invalid_argument("presentation generator " + g.name + " needs degree >= 1");
    const Polynomial img = rt.parse(g.image);
    Polynomial part(R.arity());
    for (const auto& [e, c] : img.terms()) {
      if (e[ti] != g.degree) {
        throw std::invalid_argument("image of " + g.name + " is not of the form r*" + tname + "^" +
                                    std::to_string(g.degree));
      }
      part.add_term(Exponents(e.begin(), e.end() - 1), c);
    }
    parts.push_back(std::move(part));
    degs.push_back(g.degree);
  }

  PresentationCheck out;
  for (int d = 1; d <= max_degree; ++d) {
    PresentationCheck::PerDegree pd;
    pd.degree = d;
    std::vector<Polynomial> generated;
    std::vector<int> c(parts.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
      if (i == parts.size()) {
        if (sum != d) return;
        Polynomial p = R.one();
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (c[j] > 0) p = p * parts[j].pow(static_cast<unsigned>(c[j]));
        }
        if (!p.is_zero()) generated.push_back(std::move(p));
        return;
      }
      for (int e = 0; sum + e * degs[i] <= d; ++e) {
        c[i] = e;
        rec(i + 1, sum + e * degs[i]);
      }
      c[i] = 0;
    };
    rec(0, 0);
    const ReesDegreeGenerators expected = rees_generators(centre, d, trunc);
    for (const auto& p : generated) pd.generated.push_back(print_polynomial(p, R));
    for (const auto& p : expected.generators) pd.expected.push_back(print_polynomial(p, R));

    int level = 0;
    for (const auto& p : generated) level = std::max(level, aux_of(R, p));
    for (const auto& p : expected.generators) level = std::max(level, aux_of(R, p));
    const IdealComparison cmp = ideal_equal_up_to_degree(generated, expected.generators, R, level, trunc);
    pd.verdict = combine(cmp.verdict, expected.pruning);
    pd.first_difference = cmp.first_difference;
    out.verdict = combine(out.verdict, pd.verdict);
    out.degrees.push_back(std::move(pd));
  }
  return out;
}

}  // namespace wblow
