#include "oracles.hpp"

#include "wblow/sod.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace wblow;

namespace {

const Truncation kTrunc{2, 1, 12};

WeightedCentre centre(const GradedRing& r, std::vector<std::pair<std::string, int>> fs) {
  std::vector<CentreEntry> es;
  for (auto& [f, d] : fs) es.push_back({r.parse(f), d});
  return WeightedCentre(r, es);
}

std::vector<Degree> sorted_twists(const GradedComplex& c, int k) {
  auto t = c.module(k).twists;
  std::sort(t.begin(), t.end());
  return t;
}

const MatrixCell& cell(const HomVanishingMatrix& m, std::size_t src, std::size_t dst) {
  for (const auto& c : m.cells) {
    if (c.source == src && c.target == dst) return c;
  }
  throw std::out_of_range("no such cell");
}

}  // namespace

TEST(Beilinson, Twists) {
  const auto p1 = beilinson_resolution({1, 1});
  p1.validate();
  EXPECT_EQ(sorted_twists(p1, 2), (std::vector<Degree>{{-2, 0}}));
  EXPECT_EQ(sorted_twists(p1, 1), (std::vector<Degree>{{-1, 0}, {-1, 0}}));
  EXPECT_EQ(sorted_twists(p1, 0), (std::vector<Degree>{{0, 0}}));

  const auto p12 = beilinson_resolution({1, 2});
  EXPECT_EQ(sorted_twists(p12, 2), (std::vector<Degree>{{-3, 0}}));
  EXPECT_EQ(sorted_twists(p12, 1), (std::vector<Degree>{{-2, 0}, {-1, 0}}));

  const auto p23 = beilinson_resolution({2, 3});
  EXPECT_EQ(sorted_twists(p23, 2), (std::vector<Degree>{{-5, 0}}));
  EXPECT_EQ(sorted_twists(p23, 1), (std::vector<Degree>{{-3, 0}, {-2, 0}}));
  EXPECT_EQ(sorted_twists(p23, 0), (std::vector<Degree>{{0, 0}}));
}

TEST(Support, RegularSequencesPass) {
  for (const auto& w : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {1, 2, 3}}) {
    int total = 0;
    for (int x : w) total += x;
    const auto sc = resolution_support_check(w, -total, total, kTrunc);
    EXPECT_EQ(sc.verdict, Verdict::Pass);
  }
  // Only H_0 = Q at degree 0 survives for (1,1); x_0 and x_1 kill it.
  const auto sc = resolution_support_check({1, 1}, -2, 2, kTrunc);
  long nonzero = 0;
  for (const auto& c : sc.homology.cells) nonzero += c.dims.value() != 0;
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(sc.homology.value(0, {0, 0}), 1);
  for (const auto& a : sc.annihilation) EXPECT_EQ(a.power, 1);
}

TEST(Support, RepeatedVariableFails) {
  const auto sc = resolution_support_check({1, 1}, -2, 2, kTrunc, std::vector<std::string>{"x_0", "x_0"});
  EXPECT_EQ(sc.verdict, Verdict::Fail);
  EXPECT_TRUE(sc.witness.has_value());
}

TEST(ProjWitness, Examples) {
  const auto a = generation_witness_proj({1, 1}, -2, kTrunc);
  EXPECT_EQ(a.verdict, Verdict::Pass);
  ASSERT_EQ(a.steps.size(), 1u);
  EXPECT_EQ(a.steps[0].kind, "koszul");
  EXPECT_EQ(a.steps[0].target, -2);

  const auto b = generation_witness_proj({1, 2}, 1, kTrunc);
  EXPECT_EQ(b.verdict, Verdict::Pass);
  EXPECT_EQ(b.window, (std::vector<int>{-2, -1, 0}));
  ASSERT_FALSE(b.steps.empty());
  EXPECT_EQ(b.steps.back().target, 1);

  for (int s = -5; s <= 2; ++s) EXPECT_EQ(generation_witness_proj({1, 2}, s, kTrunc).verdict, Verdict::Pass) << s;
}

TEST(Triangle, WindowAndSanity) {
  const GradedRing r = make_base_ring({"x", "y"});
  const auto c11 = centre(r, {{"x", 1}, {"y", 1}});
  const auto t = exceptional_triangle_check(c11, -1, kTrunc);
  EXPECT_EQ(t.verdict, Verdict::Pass);
  for (const auto& c : t.cone.cells) EXPECT_EQ(c.dims.value(), 0);

  const auto c21 = centre(r, {{"x", 2}, {"y", 1}});
  for (int rr : {-1, -2}) {
    const auto tr = exceptional_triangle_check(c21, rr, kTrunc);
    EXPECT_EQ(tr.verdict, Verdict::Pass) << rr;
    for (const auto& c : tr.divisor.cells) EXPECT_EQ(c.dims.value(), 0);
  }

  // Outside the window: O_E on E = P^1 has cohomology (1, 0) in aux 0.
  const auto s = exceptional_triangle_check(c11, 0, kTrunc);
  EXPECT_EQ(s.verdict, Verdict::Pass);
  EXPECT_EQ(s.divisor.value(0, {0, 0}), 1);
  EXPECT_EQ(s.divisor.value(1, {0, 0}), 0);
}

TEST(Blocks, CountIsTotalWeight) {
  const GradedRing r = make_base_ring({"x", "y", "z"});
  for (auto fs : std::vector<std::vector<std::pair<std::string, int>>>{
           {{"x", 1}}, {{"x", 1}, {"y", 1}}, {{"x", 2}, {"y", 1}}, {{"x", 1}, {"y", 2}, {"z", 3}}}) {
    const auto bp = extended_rees_presentation(centre(r, fs));
    const auto blocks = sod_blocks(bp);
    ASSERT_EQ(static_cast<int>(blocks.size()), bp.total_weight());
    EXPECT_EQ(blocks.back().kind, BlockKind::Pullback);
    EXPECT_EQ(blocks.back().label(), "Phi_0");
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      EXPECT_EQ(blocks[i].kind, BlockKind::Exceptional);
      EXPECT_EQ(blocks[i].r, 1 - bp.total_weight() + static_cast<int>(i));
      blocks[i].representative.validate();
    }
  }
}

TEST(Matrix, UsualBlowup) {
  const GradedRing r = make_base_ring({"x", "y"});
  const auto m = hom_vanishing_matrix(centre(r, {{"x", 1}, {"y", 1}}), kTrunc);
  EXPECT_EQ(m.verdict, Verdict::Pass);
  EXPECT_EQ(m.labels, (std::vector<std::string>{"Phi_-1", "Phi_0"}));
  const auto& forbidden = cell(m, 1, 0);
  EXPECT_FALSE(forbidden.diagonal);
  for (const auto& c : forbidden.dims.cells) EXPECT_EQ(c.dims.value(), 0);
  // Hom(Phi_-1, Phi_-1): dim (R/(x,y))_k in index 0, nothing elsewhere.
  const auto& diag = cell(m, 0, 0);
  EXPECT_TRUE(diag.diagonal);
  for (const auto& c : diag.dims.cells) {
    EXPECT_EQ(c.dims.value(), c.index == 0 && c.degree.aux == 0 ? 1 : 0) << c.index << to_string(c.degree);
  }
}

TEST(Matrix, WeightedBlowup) {
  const GradedRing r = make_base_ring({"x", "y"});
  const auto m = hom_vanishing_matrix(centre(r, {{"x", 2}, {"y", 1}}), kTrunc);
  EXPECT_EQ(m.verdict, Verdict::Pass);
  long forbidden = 0;
  for (const auto& c : m.cells) {
    if (c.diagonal) continue;
    ++forbidden;
    EXPECT_GT(c.source, c.target);
    EXPECT_EQ(c.verdict, Verdict::Pass);
  }
  EXPECT_EQ(forbidden, 3);
}

TEST(Witness, Blowup) {
  const GradedRing r = make_base_ring({"x", "y"});
  const auto c = centre(r, {{"x", 2}, {"y", 1}});
  const auto w = generation_witness(c, -2, kTrunc);
  EXPECT_EQ(w.verdict, Verdict::Pass);
  std::vector<int> cone_targets;
  for (const auto& s : w.steps) {
    EXPECT_EQ(s.verdict, Verdict::Pass) << s.kind << " " << s.target << " " << s.detail;
    if (s.kind == "cone-s") cone_targets.push_back(s.target);
  }
  EXPECT_EQ(cone_targets, (std::vector<int>{-1, -2}));
  // Steps further out combine cone and Koszul steps; every one balances.
  for (int s : {-4, 1, 2}) EXPECT_EQ(generation_witness(c, s, kTrunc).verdict, Verdict::Pass) << s;
}

TEST(Report, Examples) {
  const GradedRing r = make_base_ring({"x", "y"});
  const auto a = sod_report(centre(r, {{"x", 1}, {"y", 1}}), kTrunc);
  EXPECT_EQ(a.overall, Verdict::Pass);
  EXPECT_EQ(a.summand_count, 2);
  EXPECT_EQ(a.matrix.labels.size(), 2u);

  const auto b = sod_report(centre(r, {{"x", 2}, {"y", 1}}), kTrunc);
  EXPECT_EQ(b.overall, Verdict::Pass);
  EXPECT_EQ(b.summand_count, 3);
  EXPECT_EQ(b.triangles.size(), 2u);

  const auto bad = sod_report(centre(r, {{"x", 1}, {"x", 1}}), kTrunc);
  EXPECT_EQ(bad.overall, Verdict::Fail);
  EXPECT_EQ(bad.regularity, Verdict::Fail);
  ASSERT_TRUE(bad.regularity_witness.has_value());
  EXPECT_EQ(bad.regularity_witness->index, 1);
}

TEST(Report, SingleWeightOneEntry) {
  const GradedRing r = make_base_ring({"x", "y"});
  const auto rep = sod_report(centre(r, {{"x", 1}}), kTrunc);
  EXPECT_EQ(rep.summand_count, 1);
  EXPECT_EQ(rep.matrix.labels.size(), 1u);
  EXPECT_TRUE(rep.triangles.empty());
  EXPECT_EQ(rep.overall, Verdict::Pass);
}
