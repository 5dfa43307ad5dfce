#include "wblow/homology.hpp"

namespace wblow {

HomologyTable homology(const GradedComplex& complex, const std::vector<Degree>& degrees, const Truncation& trunc,
                       bool witnesses) {
  std::vector<int> ns;
  const auto idx = complex.indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) ns.push_back(-*it);
  DimTable t = hypercohomology(complex, {}, degrees, ns, trunc, witnesses);
  for (auto& c : t.cells) c.index = -c.index;
  return t;
}

RegularityResult koszul_regularity_check(const GradedRing& ring, const std::vector<SequenceEntry>& sequence,
                                         const std::vector<Degree>& degrees, const Truncation& trunc) {
  const GradedComplex k = koszul_complex(ring, sequence);
  k.validate();
  RegularityResult out;
  const int n = static_cast<int>(sequence.size());
  if (n == 0) return out;
  std::vector<int> ns;
  for (int r = n; r >= 1; --r) ns.push_back(-r);
  DimTable t = hypercohomology(k, {}, degrees, ns, trunc, true);
  for (auto& c : t.cells) {
    c.index = -c.index;
    if (!c.dims.stable) {
      out.verdict = combine(out.verdict, Verdict::Inconclusive);
    } else if (c.dims.value() != 0) {
      out.verdict = Verdict::Fail;
      if (!out.witness) out.witness = HomologyWitness{c.index, c.degree, c.witness.value_or("")};
    }
  }
  out.table = std::move(t);
  return out;
}

std::vector<Degree> degree_box(int wmin, int wmax, int amin, int amax) {
  std::vector<Degree> out;
  for (int w = wmin; w <= wmax; ++w) {
    for (int a = amin; a <= amax; ++a) out.push_back({w, a});
  }
  return out;
}

}  // namespace wblow
