#include "oracles.hpp"

#include "wblow/rees.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace wblow;

namespace {

WeightedCentre monomial_centre(const GradedRing& r, std::vector<std::pair<std::string, int>> fs) {
  std::vector<CentreEntry> es;
  for (auto& [f, d] : fs) es.push_back({r.parse(f), d});
  return WeightedCentre(r, es);
}

std::vector<std::string> printed(const std::vector<Polynomial>& ps, const GradedRing& r) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(print_polynomial(p, r));
  std::sort(out.begin(), out.end());
  return out;
}

// Monomial x^i y^j lies in I_d of (x, p) + (y, q) exactly when p*i + q*j >= d.
bool in_ideal_by_weight(int p, int q, int d, int i, int j) { return p * i + q * j >= d; }

// For monomial generators, membership of a monomial is divisibility by one of them.
bool divisible_by_some(const std::vector<Polynomial>& gens, const Exponents& m) {
  for (const auto& g : gens) {
    const Exponents& e = g.terms().begin()->first;
    bool ok = true;
    for (std::size_t k = 0; k < m.size(); ++k) ok = ok && e[k] <= m[k];
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(Rees, MinimalExponents) {
  using V = std::vector<std::vector<int>>;
  auto sorted = [](V v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(minimal_rees_exponents({1, 1}, 2)), (V{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(sorted(minimal_rees_exponents({2, 1}, 3)), (V{{0, 3}, {1, 1}, {2, 0}}));
  EXPECT_EQ(sorted(minimal_rees_exponents({2}, 1)), (V{{1}}));
}

TEST(Rees, GeneratorExamples) {
  const GradedRing r = make_base_ring({"x", "y"});
  EXPECT_EQ(printed(rees_generators(monomial_centre(r, {{"x", 1}, {"y", 1}}), 2).generators, r),
            (std::vector<std::string>{"x*y", "x^2", "y^2"}));
  EXPECT_EQ(printed(rees_generators(monomial_centre(r, {{"x", 2}, {"y", 1}}), 2).generators, r),
            (std::vector<std::string>{"x", "y^2"}));
  EXPECT_EQ(printed(rees_generators(monomial_centre(r, {{"x", 2}, {"y", 1}}), 3).generators, r),
            (std::vector<std::string>{"x*y", "x^2", "y^3"}));
}

// Against the weight criterion for monomial centres, over all small weights.
TEST(Rees, MonomialCentresAgainstWeightCriterion) {
  const GradedRing r = make_base_ring({"x", "y"});
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const auto c = monomial_centre(r, {{"x", p}, {"y", q}});
      for (int d = 1; d <= 6; ++d) {
        const auto g = rees_generators(c, d);
        for (int i = 0; i <= 7; ++i) {
          for (int j = 0; j <= 7; ++j) {
            EXPECT_EQ(divisible_by_some(g.generators, {i, j}), in_ideal_by_weight(p, q, d, i, j))
                << "p=" << p << " q=" << q << " d=" << d << " x^" << i << " y^" << j;
          }
        }
      }
    }
  }
}

TEST(Rees, ExtendedPresentationRelations) {
  const GradedRing r = make_base_ring({"x", "y"});
  const auto bp = extended_rees_presentation(monomial_centre(r, {{"y", 2}, {"x", 1}}));
  // Entries are sorted by weight: (x,1) first.
  EXPECT_EQ(bp.weights, (std::vector<int>{1, 2}));
  ASSERT_EQ(bp.ring.relations().size(), 2u);
  EXPECT_EQ(bp.ring.relations()[0], bp.ring.parse("x - u_0*s"));
  EXPECT_EQ(bp.ring.relations()[1], bp.ring.parse("y - u_1*s^2"));
  EXPECT_EQ(bp.ring.variables()[bp.s].degree(), (Degree{-1, 0}));
  EXPECT_EQ(bp.ring.variables()[bp.u[1]].degree(), (Degree{2, 1}));
  EXPECT_EQ(bp.total_weight(), 3);
  EXPECT_TRUE(bp.ambient().relations().empty());
}

TEST(Rees, PresentationVerification) {
  const GradedRing r = make_base_ring({"x", "y"});
  const auto c = monomial_centre(r, {{"x", 2}, {"y", 1}});
  const std::vector<PresentationGenerator> uvw = {{"U", "x*t", 1}, {"V", "y*t", 1}, {"W", "x*t^2", 2}};
  const auto ok = verify_presentation_against_rees(c, uvw, 6);
  EXPECT_EQ(ok.verdict, Verdict::Pass);
  EXPECT_EQ(ok.degrees.size(), 6u);

  const std::vector<PresentationGenerator> uv = {{"U", "x*t", 1}, {"V", "y*t", 1}};
  const auto bad = verify_presentation_against_rees(c, uv, 6);
  EXPECT_EQ(bad.verdict, Verdict::Fail);
  const auto first = std::find_if(bad.degrees.begin(), bad.degrees.end(),
                                  [](const auto& d) { return d.verdict == Verdict::Fail; });
  ASSERT_NE(first, bad.degrees.end());
  EXPECT_EQ(first->degree, 2);

  EXPECT_EQ(verify_presentation_against_rees(c, canonical_presentation(c), 6).verdict, Verdict::Pass);
}

TEST(Rees, CanonicalPresentationNames) {
  const GradedRing r = make_base_ring({"x", "y"});
  const auto c = monomial_centre(r, {{"x", 2}, {"y", 1}});
  const auto p = canonical_presentation(c);
  std::vector<std::string> names;
  for (const auto& g : p) names.push_back(g.name);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"u_0", "u_1", "u_1[1]"}));
}

// I_{d+1} is inside I_d, and I_d I_e inside I_{d+e}, for random centres.
TEST(Rees, FiltrationProperties) {
  const GradedRing r = make_base_ring({"x", "y", "z"});
  const std::vector<std::string> polys = {"x", "y", "z", "x + y", "x^2 - y*z", "y^2"};
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(polys.size()) - 1), weight(1, 3);
  const Truncation tr;
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::pair<std::string, int>> fs;
    const int n = 1 + trial % 2;
    for (int i = 0; i <= n; ++i) fs.push_back({polys[pick(rng)], weight(rng)});
    const auto c = monomial_centre(r, fs);
    std::vector<std::vector<Polynomial>> I(5);
    for (int d = 1; d <= 4; ++d) I[d] = rees_generators(c, d).generators;
    for (int d = 1; d < 4; ++d) {
      EXPECT_EQ(ideal_contains(I[d], I[d + 1], r, 8, tr).verdict, Verdict::Pass) << "d=" << d;
    }
    for (int d = 1; d <= 2; ++d) {
      for (int e = 1; d + e <= 4; ++e) {
        std::vector<Polynomial> prod;
        for (const auto& a : I[d]) {
          for (const auto& b : I[e]) prod.push_back(a * b);
        }
        EXPECT_EQ(ideal_contains(I[d + e], prod, r, 8, tr).verdict, Verdict::Pass) << d << "+" << e;
      }
    }
  }
}

TEST(Rees, ExceptionalDivisorAgreement) {
  const GradedRing r = make_base_ring({"x", "y"});
  for (auto fs : std::vector<std::vector<std::pair<std::string, int>>>{
           {{"x", 1}, {"y", 1}}, {{"x", 2}, {"y", 1}}, {{"x", 1}, {"y", 3}}}) {
    const auto ex = exceptional_divisor(monomial_centre(r, fs), 3, 2);
    EXPECT_EQ(ex.agreement, Verdict::Pass);
    for (const auto& cell : ex.dims.cells) {
      if (cell.index == 0) EXPECT_EQ(cell.dims.value(), ex.dims.value(1, cell.degree));
    }
  }
  // (R/(x,y))[u0,u1] = Q[u0,u1]: weight w aux k piece for weights (1,1) has
  // dim w+1 when k = w and 0 otherwise.
  const auto ex = exceptional_divisor(monomial_centre(r, {{"x", 1}, {"y", 1}}), 3, 3);
  for (int w = 0; w <= 3; ++w) {
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(ex.dims.value(0, {w, k}), k == w ? oracle::poly_dim(2, w) : 0);
  }
}

TEST(Rees, FreshName) {
  EXPECT_EQ(fresh_name("t", {"x", "y"}), "t");
  EXPECT_EQ(fresh_name("t", {"t", "t_1"}), "t_2");
}

TEST(Rees, CentreValidation) {
  const GradedRing r = make_base_ring({"x", "y"});
  EXPECT_THROW(WeightedCentre(r, {{r.parse("x + y^2"), 1}}), std::invalid_argument);
  EXPECT_THROW(WeightedCentre(r, {{r.parse("x"), 0}}), std::invalid_argument);
  EXPECT_THROW(WeightedCentre(r, {{r.parse("1"), 1}}), std::invalid_argument);
}
