// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include "wblow/cohomology.hpp"
#include "wblow/job.hpp"
#include "wblow/sod.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace wblow;

namespace {

// Stabilized dimensions are compared exactly.
constexpr long kTolerance = 0;
constexpr int kMaxBound = 12;
constexpr double kPushforwardBudgetSec = 5 * 60;
constexpr double kSodBudgetSec = 15 * 60;

const Truncation kTrunc{2, 1, kMaxBound};

bool same(long a, long b) { return std::labs(a - b) <= kTolerance; }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

WeightedCentre centre(const std::vector<std::string>& vars, std::vector<std::pair<std::string, int>> fs) {
  const GradedRing r = make_base_ring(vars);
  std::vector<CentreEntry> es;
  for (auto& [f, d] : fs) es.push_back({r.parse(f), d});
  return WeightedCentre(r, es);
}

std::vector<WeightedCentre> criterion1_centres() {
  return {centre({"x", "y"}, {{"x", 1}, {"y", 1}}), centre({"x", "y"}, {{"x", 2}, {"y", 1}}),
          centre({"x", "y", "z"}, {{"x", 1}, {"y", 2}, {"z", 3}}), centre({"x"}, {{"x", 2}})};
}

long base_dim(const WeightedCentre& c, int k) {
  return static_cast<long>(GradedPieceBasis(c.base(), {0, k}, std::nullopt).dim());
}

std::string weights_text(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

Outcome pushforward() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& c : criterion1_centres()) {
    const auto res = pushforward_structure_check(c, kTrunc);
    if (res.verdict != Verdict::Pass) o.fail("pushforward " + std::string(to_string(res.verdict)) + " for weights " +
                                             weights_text(c.weights()));
    for (const auto& cell : res.blowup.cells) {
      if (!cell.dims.stable || cell.dims.dim_at_bound.back().first > kMaxBound) o.fail("unstable cell");
    }
  }
  const double sec = seconds_since(t0);
  if (sec > kPushforwardBudgetSec) o.fail("runtime " + std::to_string(sec) + "s");
  if (o.pass) o.detail = "4 centres, " + std::to_string(sec) + "s";
  return o;
}

const std::vector<std::vector<int>> kProjWeights = {{1, 1}, {1, 2}, {2, 3}, {1, 2, 3}};

struct ProjRun {
  std::vector<int> w;
  int r;
  std::vector<long> formula;
  std::vector<long> cech;
  bool stable;
};

std::vector<ProjRun> compute_proj_runs() {
  std::vector<ProjRun> runs;
  const GradedRing point = make_base_ring({});
  for (const auto& w : kProjWeights) {
    for (int r = -10; r <= 10; ++r) {
      ProjRun run{w, r, weighted_proj_cohomology_formula(w, r), {}, true};
      const auto t = weighted_proj_cohomology_cech(point, w, r, kTrunc, {0});
      for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& cell = t.at(static_cast<int>(i), {r, 0});
        run.cech.push_back(cell.dims.value());
        run.stable = run.stable && cell.dims.stable;
      }
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

// Shared by criteria 2 and 3.
const std::vector<ProjRun>& proj_runs() {
  static const std::vector<ProjRun> runs = compute_proj_runs();
  return runs;
}

Outcome proj_agreement(const std::vector<ProjRun>& runs) {
  Outcome o;
  long mismatches = 0;
  for (const auto& run : runs) {
    bool ok = run.stable;
    for (std::size_t i = 0; i < run.w.size(); ++i) ok = ok && same(run.formula[i], run.cech[i]);
    if (!ok) {
      ++mismatches;
      o.fail("weights " + weights_text(run.w) + " r=" + std::to_string(run.r));
    }
  }
  if (o.pass) o.detail = std::to_string(runs.size()) + " rows, 0 mismatches";
  else o.detail += " (" + std::to_string(mismatches) + " mismatches)";
  return o;
}

Outcome vanishing_window(const std::vector<ProjRun>& runs) {
  Outcome o;
  long checked = 0;
  for (const auto& run : runs) {
    int total = 0;
    for (int x : run.w) total += x;
    if (run.r < 1 - total || run.r > -1) continue;
    ++checked;
    for (std::size_t i = 0; i < run.w.size(); ++i) {
      if (!same(run.formula[i], 0) || !same(run.cech[i], 0) || !run.stable) {
        o.fail("weights " + weights_text(run.w) + " r=" + std::to_string(run.r) + " H^" + std::to_string(i));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " twists zero by both routes";
  return o;
}

RegularityResult deformed_regularity(const WeightedCentre& c, int max_aux = 2) {
  const auto bp = extended_rees_presentation(c);
  std::vector<SequenceEntry> seq;
  for (std::size_t i = 0; i < c.size(); ++i) {
    seq.push_back({bp.ring.relations()[bp.base_relations + i], {0, c.aux_degree(i)}});
  }
  std::vector<Degree> degrees;
  const int emax = c.max_aux_degree();
  for (int w = -bp.total_weight() - 1; w <= 1; ++w) {
    for (int k = std::min(0, w * emax); k <= max_aux; ++k) degrees.push_back({w, k});
  }
  return koszul_regularity_check(bp.ambient(), seq, degrees, kTrunc);
}

Outcome koszul_regularity() {
  Outcome o;
  for (const auto& c : {centre({"x"}, {{"x", 2}}), centre({"x", "y"}, {{"x", 1}, {"y", 2}}),
                        centre({"x", "y"}, {{"x", 2}, {"y", 3}})}) {
    const auto r = deformed_regularity(c);
    if (r.verdict != Verdict::Pass) o.fail("deformed sequence for " + weights_text(c.weights()) + " not regular");
  }
  const GradedRing rx = make_base_ring({"x"});
  const std::vector<SequenceEntry> xx = {{rx.parse("x"), {0, 1}}, {rx.parse("x"), {0, 1}}};
  const auto bad = koszul_regularity_check(rx, xx, degree_box(0, 0, 0, 4), kTrunc);
  if (bad.verdict != Verdict::Fail || !bad.witness) {
    o.fail("(x,x) not rejected with a witness");
  } else if (o.pass) {
    o.detail = "3 deformed sequences regular; (x,x) fails with H_" + std::to_string(bad.witness->index) + " at " +
               to_string(bad.witness->degree);
  }
  return o;
}

Outcome spectral_cech() {
  Outcome o;
  long cells = 0;
  for (const auto& c : criterion1_centres()) {
    const auto bp = extended_rees_presentation(c);
    for (int r = -bp.total_weight() - 1; r <= 1; ++r) {
      const auto aux = aux_window(bp, r, 2);
      const auto cech = blowup_cohomology_cech(bp, r, kTrunc, aux);
      const auto spec = blowup_cohomology_spectral(c, r, kTrunc, aux);
      if (spec.regularity != Verdict::Pass) o.fail("spectral regularity for " + weights_text(c.weights()));
      for (const auto& cell : cech.cells) {
        ++cells;
        long sv = -1;
        try {
          sv = spec.table.value(cell.index, cell.degree);
        } catch (const std::out_of_range&) {
        }
        if (!cell.dims.stable || !same(sv, cell.dims.value())) {
          o.fail(weights_text(c.weights()) + " r=" + std::to_string(r) + " H^" + std::to_string(cell.index) + " at " +
                 to_string(cell.degree));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cells) + " cells agree";
  return o;
}

// H^0(O(r)) at (r, k) is s^{-r} R_k: the dims match R_k and the sections
// s^{-r} m over a monomial basis m of R_k stay independent in cohomology.
Outcome proof_window() {
  Outcome o;
  const auto c = centre({"x", "y"}, {{"x", 2}, {"y", 1}});
  const auto bp = extended_rees_presentation(c);
  const auto o_complex = line_bundle(bp.ring, {});
  const HypercohomologyEngine engine(o_complex, bp.u);
  for (int r : {-2, -1, 0}) {
    const std::vector<int> aux = {0, 1, 2};
    const auto h = blowup_cohomology_cech(bp, r, kTrunc, aux);
    for (int k : aux) {
      const long rk = base_dim(c, k);
      if (!h.at(0, {r, k}).dims.stable || !same(h.value(0, {r, k}), rk)) o.fail("H^0 dim at r=" + std::to_string(r));
      if (!h.at(1, {r, k}).dims.is_zero()) o.fail("H^1 nonzero at r=" + std::to_string(r));

      const GradedPieceBasis basis(c.base(), {0, k}, std::nullopt);
      std::vector<Polynomial> sections;
      for (const auto& m : basis.basis()) {
        Exponents e(bp.ring.arity(), 0);
        for (std::size_t i = 0; i < bp.base.size(); ++i) e[bp.base[i]] = m[i];
        e[bp.s] = -r;
        sections.push_back(bp.ring.one().times_monomial(e));
      }
      const int b = std::max(kTrunc.bound, engine.minimum_bound({r, k}));
      if (!same(engine.section_rank({r, k}, b, sections), rk) ||
          !same(engine.section_rank({r, k}, b + 1, sections), rk)) {
        o.fail("s^" + std::to_string(-r) + " R_" + std::to_string(k) + " not free of rank one");
      }
    }
  }
  if (o.pass) o.detail = "r = -2, -1 free of rank one on s^{-r}; H^0(O) = R; H^1 = 0";
  return o;
}

Outcome presentation() {
  Outcome o;
  const auto c = centre({"x", "y"}, {{"x", 2}, {"y", 1}});
  const auto full = verify_presentation_against_rees(c, {{"U", "x*t", 1}, {"V", "y*t", 1}, {"W", "x*t^2", 2}}, 6, kTrunc);
  if (full.verdict != Verdict::Pass || full.degrees.size() != 6) o.fail("U,V,W presentation not equal up to d = 6");
  const auto partial = verify_presentation_against_rees(c, {{"U", "x*t", 1}, {"V", "y*t", 1}}, 6, kTrunc);
  int first = 0;
  for (const auto& d : partial.degrees) {
    if (d.verdict == Verdict::Fail) {
      first = d.degree;
      break;
    }
  }
  if (partial.verdict != Verdict::Fail || first != 2) {
    o.fail("without W: first difference at d = " + std::to_string(first));
  }
  if (o.pass) o.detail = "equal for d <= 6; without W unequal at d = 2";
  return o;
}

Outcome sod() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<WeightedCentre, int>> cases = {{centre({"x", "y"}, {{"x", 1}, {"y", 1}}), 2},
                                                             {centre({"x", "y"}, {{"x", 2}, {"y", 1}}), 3}};
  for (const auto& [c, count] : cases) {
    const std::string tag = weights_text(c.weights());
    const auto rep = sod_report(c, kTrunc);
    if (rep.summand_count != count) o.fail(tag + " summand count " + std::to_string(rep.summand_count));
    if (rep.overall != Verdict::Pass) o.fail(tag + " overall " + std::string(to_string(rep.overall)));
    for (const auto& cell : rep.matrix.cells) {
      if (cell.diagonal) continue;
      for (const auto& d : cell.dims.cells) {
        if (!d.dims.is_zero()) o.fail(tag + " forbidden cell " + rep.matrix.labels[cell.source] + " -> " +
                                      rep.matrix.labels[cell.target]);
      }
    }
    if (static_cast<int>(rep.triangles.size()) != count - 1) o.fail(tag + " triangle count");
    for (const auto& t : rep.triangles) {
      if (t.verdict != Verdict::Pass) o.fail(tag + " triangle r=" + std::to_string(t.r));
    }
    for (int s = 1 - count; s <= 0; ++s) {
      bool found = false;
      for (const auto& w : rep.witnesses) found = found || (w.target == s && w.verdict == Verdict::Pass);
      if (!found) o.fail(tag + " no witness for O(" + std::to_string(s) + ")");
    }
  }
  const double sec = seconds_since(t0);
  if (sec > kSodBudgetSec) o.fail("runtime " + std::to_string(sec) + "s");
  if (o.pass) o.detail = "summands 2 and 3, " + std::to_string(sec) + "s";
  return o;
}

Outcome support() {
  Outcome o;
  for (const auto& w : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {1, 2, 3}}) {
    int total = 0;
    for (int x : w) total += x;
    const auto sc = resolution_support_check(w, -total, total, kTrunc);
    if (sc.verdict != Verdict::Pass) o.fail(weights_text(w) + " " + std::string(to_string(sc.verdict)));
  }
  const auto bad = resolution_support_check({1, 1}, -2, 2, kTrunc, std::vector<std::string>{"x_0", "x_0"});
  if (bad.verdict != Verdict::Fail) o.fail("(x_0, x_0) " + std::string(to_string(bad.verdict)));
  if (o.pass) o.detail = "(1,1), (1,2), (1,2,3) pass; (x_0, x_0) fails";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(WBLOW_FIXTURE_DIR)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  auto all_reports = [&] {
    std::vector<std::string> out;
    for (const auto& f : files) out.push_back(report_to_json(run(parse_job(slurp(f))), false));
    return out;
  };
  const auto first = all_reports();
  const auto second = all_reports();
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (first[i] != second[i]) o.fail(files[i].filename().string() + " differs");
  }
  if (files.empty()) o.fail("no fixtures found");
  if (o.pass) o.detail = std::to_string(files.size()) + " fixtures byte-identical across two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, pushforward},
      {2, [] { return proj_agreement(proj_runs()); }},
      {3, [] { return vanishing_window(proj_runs()); }},
      {4, koszul_regularity},
      {5, spectral_cech},
      {6, proof_window},
      {7, presentation},
      {8, sod},
      {9, support},
      {10, determinism},
  };
  int failures = 0;
  for (const auto& [n, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
