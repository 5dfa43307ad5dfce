#include "wblow/job.hpp"

#include "wblow/cohomology.hpp"
#include "wblow/graded_piece.hpp"
#include "wblow/homology.hpp"
#include "wblow/rees.hpp"
#include "wblow/sod.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>

namespace wblow {

using json = nlohmann::ordered_json;

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> commands = {"koszul-check", "rees-gens",         "rees-verify", "proj-coh",
                                                    "blowup-coh",   "pushforward-check", "sod-verify",  "all"};
  return commands;
}

namespace {

// Finds text positions for diagnostics. Keys are located by scanning for
// their quoted spelling in order, which is enough for the flat job schema.
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  std::size_t key(const std::vector<std::string>& path) const {
    std::size_t pos = 0;
    for (const auto& k : path) {
      const std::size_t p = text_.find("\"" + k + "\"", pos);
      if (p == std::string_view::npos) return pos;
      pos = p;
    }
    return pos;
  }

  // Start of the serialized value `v` after the key path.
  std::size_t value(const std::vector<std::string>& path, const json& v) const {
    const std::size_t from = key(path);
    const std::string needle = v.dump();
    const std::size_t p = text_.find(needle, from);
    return p == std::string_view::npos ? from : p;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t byte) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw JobError(message, line, column);
  }

 private:
  std::string_view text_;
};

const json& require(const json& obj, const std::string& key, const std::vector<std::string>& path,
                    const Locator& loc) {
  if (!obj.contains(key)) loc.fail("missing key \"" + key + "\"", loc.key(path));
  return obj.at(key);
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::vector<std::string>& path,
                const Locator& loc) {
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) {
      auto p = path;
      p.push_back(k);
      loc.fail("unknown key \"" + k + "\"", loc.key(p));
    }
  }
}

std::string need_string(const json& v, const std::string& what, std::size_t at, const Locator& loc) {
  if (!v.is_string()) loc.fail(what + " must be a string", at);
  return v.get<std::string>();
}

long need_int(const json& v, const std::string& what, std::size_t at, const Locator& loc) {
  if (!v.is_number_integer()) loc.fail(what + " must be an integer", at);
  return v.get<long>();
}

std::vector<std::string> string_array(const json& v, const std::string& what, const std::vector<std::string>& path,
                                      const Locator& loc) {
  if (!v.is_array()) loc.fail(what + " must be an array of strings", loc.key(path));
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(need_string(e, what + " entry", loc.value(path, e), loc));
  return out;
}

GradedRing presentation_ring(const GradedRing& R) {
  std::vector<Variable> vars = R.variables();
  std::vector<std::string> taken;
  for (const auto& v : vars) taken.push_back(v.name);
  vars.push_back({fresh_name("t", taken), 1, 0, false});
  return GradedRing(vars);
}

}  // namespace

JobSpec parse_job(std::string_view text) {
  const Locator loc(text);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    loc.fail("malformed JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!doc.is_object()) loc.fail("job must be a JSON object", 0);
  check_keys(doc,
             {"base_ring", "centre", "twist_window", "truncation", "command", "format", "presentation", "aux_max"},
             {}, loc);

  JobSpec job;
  const json& base = require(doc, "base_ring", {}, loc);
  if (!base.is_object()) loc.fail("base_ring must be an object", loc.key({"base_ring"}));
  check_keys(base, {"vars", "relations"}, {"base_ring"}, loc);
  job.vars = string_array(require(base, "vars", {"base_ring"}, loc), "vars", {"base_ring", "vars"}, loc);
  if (base.contains("relations")) {
    job.relations = string_array(base.at("relations"), "relations", {"base_ring", "relations"}, loc);
  }

  const json& centre = require(doc, "centre", {}, loc);
  if (!centre.is_array() || centre.empty()) loc.fail("centre must be a nonempty array", loc.key({"centre"}));
  for (const auto& e : centre) {
    const std::size_t at = loc.value({"centre"}, e);
    if (!e.is_object()) loc.fail("centre entry must be an object", at);
    if (!e.contains("poly") || !e.contains("weight")) loc.fail("centre entry needs \"poly\" and \"weight\"", at);
    for (const auto& [k, v] : e.items()) {
      if (k != "poly" && k != "weight") loc.fail("unknown key \"" + k + "\" in centre entry", at);
    }
    const long w = need_int(e.at("weight"), "weight", at, loc);
    if (w < 1) loc.fail("weight must be at least 1", at);
    job.centre.push_back({need_string(e.at("poly"), "poly", at, loc), static_cast<int>(w)});
  }

  const json& window = require(doc, "twist_window", {}, loc);
  const std::size_t wat = loc.key({"twist_window"});
  if (!window.is_array() || window.size() != 2) loc.fail("twist_window must be [r_min, r_max]", wat);
  job.r_min = static_cast<int>(need_int(window[0], "twist_window entry", wat, loc));
  job.r_max = static_cast<int>(need_int(window[1], "twist_window entry", wat, loc));
  if (job.r_min > job.r_max) loc.fail("twist_window needs r_min <= r_max", wat);

  const json& tr = require(doc, "truncation", {}, loc);
  const std::size_t tat = loc.key({"truncation"});
  if (!tr.is_object()) loc.fail("truncation must be an object", tat);
  check_keys(tr, {"initial", "step", "max"}, {"truncation"}, loc);
  job.truncation.bound = static_cast<int>(need_int(require(tr, "initial", {"truncation"}, loc), "initial", tat, loc));
  job.truncation.step = static_cast<int>(need_int(require(tr, "step", {"truncation"}, loc), "step", tat, loc));
  job.truncation.max_bound = static_cast<int>(need_int(require(tr, "max", {"truncation"}, loc), "max", tat, loc));
  try {
    job.truncation.validate();
  } catch (const std::invalid_argument& e) {
    loc.fail(e.what(), tat);
  }

  const json& cmd = require(doc, "command", {}, loc);
  job.command = need_string(cmd, "command", loc.key({"command"}), loc);
  const auto& cmds = job_commands();
  if (std::find(cmds.begin(), cmds.end(), job.command) == cmds.end()) {
    loc.fail("unknown command \"" + job.command + "\"", loc.value({"command"}, cmd));
  }
  if (doc.contains("format")) {
    job.format = need_string(doc.at("format"), "format", loc.key({"format"}), loc);
    if (job.format != "json" && job.format != "table") {
      loc.fail("format must be \"json\" or \"table\"", loc.value({"format"}, doc.at("format")));
    }
  }
  if (doc.contains("aux_max")) {
    const long a = need_int(doc.at("aux_max"), "aux_max", loc.key({"aux_max"}), loc);
    if (a < 0) loc.fail("aux_max must be non-negative", loc.key({"aux_max"}));
    job.aux_max = static_cast<int>(a);
  }

  // Semantic checks: ring, polynomials, centre.
  GradedRing R;
  try {
    R = make_base_ring(job.vars, {});
  } catch (const std::exception& e) {
    loc.fail(e.what(), loc.key({"base_ring", "vars"}));
  }
  std::vector<Polynomial> rels;
  for (std::size_t i = 0; i < job.relations.size(); ++i) {
    const std::size_t at = loc.value({"base_ring", "relations"}, base.at("relations")[i]);
    try {
      rels.push_back(R.parse(job.relations[i]));
    } catch (const ParseError& e) {
      loc.fail(std::string("relation: ") + e.what(), at + 1 + e.position());
    } catch (const std::exception& e) {
      loc.fail(std::string("relation: ") + e.what(), at);
    }
  }
  try {
    R = R.with_relations(rels);
  } catch (const std::exception& e) {
    loc.fail(e.what(), loc.key({"base_ring", "relations"}));
  }
  std::vector<CentreEntry> entries;
  for (std::size_t i = 0; i < job.centre.size(); ++i) {
    const std::size_t at = loc.value({"centre"}, centre[i]);
    const std::size_t pat = loc.value({"centre"}, centre[i].at("poly"));
    try {
      entries.push_back({R.parse(job.centre[i].poly), job.centre[i].weight});
    } catch (const ParseError& e) {
      loc.fail(std::string("centre poly: ") + e.what(), pat + 1 + e.position());
    } catch (const std::exception& e) {
      loc.fail(std::string("centre poly: ") + e.what(), at);
    }
  }
  try {
    WeightedCentre c(R, entries);
  } catch (const std::exception& e) {
    loc.fail(e.what(), loc.key({"centre"}));
  }

  if (doc.contains("presentation")) {
    const json& pres = doc.at("presentation");
    if (!pres.is_array()) loc.fail("presentation must be an array", loc.key({"presentation"}));
    const GradedRing rt = presentation_ring(R);
    for (const auto& g : pres) {
      const std::size_t at = loc.value({"presentation"}, g);
      if (!g.is_object() || !g.contains("name") || !g.contains("image") || !g.contains("degree")) {
        loc.fail("presentation entry needs \"name\", \"image\" and \"degree\"", at);
      }
      PresentationGenerator pg{need_string(g.at("name"), "name", at, loc), need_string(g.at("image"), "image", at, loc),
                               static_cast<int>(need_int(g.at("degree"), "degree", at, loc))};
      if (pg.degree < 1) loc.fail("presentation degree must be at least 1", at);
      try {
        rt.parse(pg.image);
      } catch (const ParseError& e) {
        loc.fail(std::string("presentation image: ") + e.what(), loc.value({"presentation"}, g.at("image")) + 1 +
                                                                      e.position());
      }
      job.presentation.push_back(std::move(pg));
    }
  }
  return job;
}

int exit_code(const std::vector<Verdict>& verdicts) {
  Verdict all = Verdict::Pass;
  for (Verdict v : verdicts) all = combine(all, v);
  switch (all) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 1;
}

int exit_code(const RunReport& report) {
  std::vector<Verdict> vs;
  for (const auto& c : report.checks) vs.push_back(c.verdict);
  return exit_code(vs);
}

namespace {

std::vector<long> degree_pair(const Degree& d) { return {d.weight, d.aux}; }

std::vector<long> bounds_of(const StabilizedDims& s) {
  std::vector<long> out;
  for (const auto& [b, v] : s.dim_at_bound) out.push_back(b);
  return out;
}

std::vector<long> dims_of(const StabilizedDims& s) {
  std::vector<long> out;
  for (const auto& [b, v] : s.dim_at_bound) out.push_back(v);
  return out;
}

ReportCell dim_cell(const DimCell& c, const std::string& index_name) {
  ReportCell cell;
  cell.fields = {{index_name, static_cast<long>(c.index)},
                 {"degree", degree_pair(c.degree)},
                 {"dim", c.dims.value()},
                 {"stable", c.dims.stable},
                 {"bounds", bounds_of(c.dims)},
                 {"dims_at_bound", dims_of(c.dims)}};
  return cell;
}

struct Context {
  const JobSpec& job;
  GradedRing base;
  WeightedCentre centre;
  BlowupPresentation bp;
};

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

void koszul_checks(const Context& cx, std::vector<CheckResult>& out) {
  const WeightedCentre& c = cx.centre;
  const Truncation& tr = cx.job.truncation;
  int aux_sum = 0;
  std::vector<SequenceEntry> plain, deformed;
  for (std::size_t i = 0; i < c.size(); ++i) {
    aux_sum += c.aux_degree(i);
    plain.push_back({c.entries()[i].f, {0, c.aux_degree(i)}});
    deformed.push_back({cx.bp.ring.relations()[cx.bp.base_relations + i], {0, c.aux_degree(i)}});
  }
  auto emit = [&](const std::string& name, const RegularityResult& r) {
    CheckResult cr{name, r.verdict, {}, std::nullopt, 0};
    for (const auto& cell : r.table.cells) cr.cells.push_back(dim_cell(cell, "homological_index"));
    if (r.witness) {
      cr.witness = "H_" + std::to_string(r.witness->index) + " at " + to_string(r.witness->degree) + ": " +
                   r.witness->cycle;
    }
    out.push_back(std::move(cr));
  };

  std::vector<Degree> bdeg;
  for (int k = 0; k <= cx.job.aux_max + aux_sum; ++k) bdeg.push_back({0, k});
  emit("koszul-base", koszul_regularity_check(c.base(), plain, bdeg, tr));

  const int emax = c.max_aux_degree();
  std::vector<Degree> ddeg;
  for (int w = cx.job.r_min; w <= cx.job.r_max; ++w) {
    for (int k = std::min(0, w * emax); k <= cx.job.aux_max; ++k) ddeg.push_back({w, k});
  }
  emit("koszul-deformed", koszul_regularity_check(cx.bp.ambient(), deformed, ddeg, tr));
}

std::vector<int> rees_degrees(const JobSpec& job) {
  return range(std::max(1, job.r_min), std::max(1, job.r_max));
}

std::string exponent_text(const std::vector<int>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

void rees_gens_check(const Context& cx, std::vector<CheckResult>& out) {
  CheckResult cr{"rees-generators", Verdict::Pass, {}, std::nullopt, 0};
  for (int d : rees_degrees(cx.job)) {
    const ReesDegreeGenerators g = rees_generators(cx.centre, d, cx.job.truncation);
    std::vector<std::string> gens, exps;
    for (const auto& p : g.generators) gens.push_back(print_polynomial(p, cx.base));
    for (const auto& e : g.exponents) exps.push_back(exponent_text(e));
    cr.cells.push_back({{{"degree", static_cast<long>(d)}, {"generators", gens}, {"exponents", exps},
                         {"pruning", std::string(to_string(g.pruning))}}});
    cr.verdict = combine(cr.verdict, g.pruning);
  }
  out.push_back(std::move(cr));
}

void rees_verify_check(const Context& cx, std::vector<CheckResult>& out) {
  const auto pres = cx.job.presentation.empty() ? canonical_presentation(cx.centre) : cx.job.presentation;
  const PresentationCheck pc =
      verify_presentation_against_rees(cx.centre, pres, std::max(1, cx.job.r_max), cx.job.truncation);
  CheckResult cr{"rees-presentation", pc.verdict, {}, std::nullopt, 0};
  for (const auto& d : pc.degrees) {
    ReportCell cell{{{"degree", static_cast<long>(d.degree)},
                     {"verdict", std::string(to_string(d.verdict))},
                     {"generated", d.generated},
                     {"expected", d.expected}}};
    if (d.first_difference) {
      cell.fields.push_back({"first_difference", degree_pair(*d.first_difference)});
      if (!cr.witness) {
        cr.witness = "ideals differ at t-degree " + std::to_string(d.degree) + ", graded degree " +
                     to_string(*d.first_difference);
      }
    }
    cr.cells.push_back(std::move(cell));
  }
  out.push_back(std::move(cr));
}

void proj_coh_check(const Context& cx, std::vector<CheckResult>& out) {
  const auto w = cx.centre.weights();
  CheckResult cr{"proj-cohomology", Verdict::Pass, {}, std::nullopt, 0};
  const std::vector<int> aux = cx.base.arity() == 0 ? std::vector<int>{0} : range(0, cx.job.aux_max);
  for (int r = cx.job.r_min; r <= cx.job.r_max; ++r) {
    const CohomologyTable t = weighted_proj_cohomology_cech(cx.base, w, r, cx.job.truncation, aux);
    for (int k : aux) {
      const long bdim = static_cast<long>(GradedPieceBasis(cx.base, {0, k}, std::nullopt).dim());
      const auto f = weighted_proj_cohomology_formula(w, r, bdim);
      for (std::size_t i = 0; i < f.size(); ++i) {
        const DimCell& c = t.at(static_cast<int>(i), {r, k});
        cr.cells.push_back({{{"r", static_cast<long>(r)},
                             {"aux", static_cast<long>(k)},
                             {"index", static_cast<long>(i)},
                             {"cech", c.dims.value()},
                             {"formula", f[i]},
                             {"stable", c.dims.stable}}});
        if (!c.dims.stable) {
          cr.verdict = combine(cr.verdict, Verdict::Inconclusive);
        } else if (c.dims.value() != f[i]) {
          cr.verdict = Verdict::Fail;
          if (!cr.witness) {
            cr.witness = "H^" + std::to_string(i) + "(O(" + std::to_string(r) + ")) at aux " + std::to_string(k) +
                         ": Cech " + std::to_string(c.dims.value()) + ", formula " + std::to_string(f[i]);
          }
        }
      }
    }
  }
  out.push_back(std::move(cr));
}

void blowup_coh_check(const Context& cx, std::vector<CheckResult>& out) {
  CheckResult cr{"blowup-cohomology", Verdict::Pass, {}, std::nullopt, 0};
  for (int r = cx.job.r_min; r <= cx.job.r_max; ++r) {
    const auto aux = aux_window(cx.bp, r, cx.job.aux_max);
    const CohomologyTable cech = blowup_cohomology_cech(cx.bp, r, cx.job.truncation, aux);
    const SpectralResult spec = blowup_cohomology_spectral(cx.centre, r, cx.job.truncation, aux);
    cr.verdict = combine(cr.verdict, spec.regularity);
    if (spec.regularity == Verdict::Fail && !cr.witness) {
      cr.witness = "higher Koszul homology in the spectral rows at r = " + std::to_string(r);
    }
    for (const auto& c : cech.cells) {
      const DimCell& s = spec.table.at(c.index, c.degree);
      const bool stable = c.dims.stable && s.dims.stable;
      cr.cells.push_back({{{"r", static_cast<long>(r)},
                           {"aux", static_cast<long>(c.degree.aux)},
                           {"index", static_cast<long>(c.index)},
                           {"cech", c.dims.value()},
                           {"spectral", s.dims.value()},
                           {"stable", stable}}});
      if (!stable) {
        cr.verdict = combine(cr.verdict, Verdict::Inconclusive);
      } else if (c.dims.value() != s.dims.value()) {
        cr.verdict = Verdict::Fail;
        if (!cr.witness) {
          cr.witness = "H^" + std::to_string(c.index) + "(O(" + std::to_string(r) + ")) at " + to_string(c.degree) +
                       ": Cech " + std::to_string(c.dims.value()) + ", spectral " + std::to_string(s.dims.value());
        }
      }
    }
  }
  out.push_back(std::move(cr));
}

void pushforward_check(const Context& cx, std::vector<CheckResult>& out) {
  const PushforwardResult p = pushforward_structure_check(cx.centre, cx.job.truncation, cx.job.aux_max);
  CheckResult cr{"pushforward", p.verdict, {}, p.witness, 0};
  for (std::size_t k = 0; k < p.base_dims.size(); ++k) {
    cr.cells.push_back({{{"aux", static_cast<long>(k)},
                         {"base_dim", p.base_dims[k]},
                         {"unit_rank", p.unit_rank[k]}}});
  }
  for (const auto& c : p.blowup.cells) cr.cells.push_back(dim_cell(c, "index"));
  out.push_back(std::move(cr));
}

std::vector<long> nonzero_cells(const DimTable& t) {
  // Flattened (index, weight, aux, dim) of every nonzero cell.
  std::vector<long> out;
  for (const auto& c : t.cells) {
    if (c.dims.value() == 0) continue;
    out.insert(out.end(), {c.index, c.degree.weight, c.degree.aux, c.dims.value()});
  }
  return out;
}

void sod_checks(const Context& cx, std::vector<CheckResult>& out) {
  const SODReport rep = sod_report(cx.centre, cx.job.truncation, cx.job.aux_max);
  CheckResult cr{"sod", rep.overall, {}, std::nullopt, 0};
  cr.cells.push_back({{{"summand_count", static_cast<long>(rep.summand_count)},
                       {"blocks", rep.matrix.labels},
                       {"regularity", std::string(to_string(rep.regularity))},
                       {"pushforward", std::string(to_string(rep.pushforward))},
                       {"hom_matrix", std::string(to_string(rep.matrix.verdict))}}});
  if (rep.regularity_witness) {
    cr.witness = "regularity: H_" + std::to_string(rep.regularity_witness->index) + " at " +
                 to_string(rep.regularity_witness->degree) + ": " + rep.regularity_witness->cycle;
  }
  for (const auto& m : rep.matrix.cells) {
    ReportCell cell{{{"hom_source", rep.matrix.labels[m.source]},
                     {"hom_target", rep.matrix.labels[m.target]},
                     {"diagonal", m.diagonal},
                     {"verdict", std::string(to_string(m.verdict))},
                     {"nonzero", nonzero_cells(m.dims)}}};
    if (m.witness) {
      cell.fields.push_back({"witness", *m.witness});
      if (!cr.witness) cr.witness = "Hom(" + rep.matrix.labels[m.source] + ", " + rep.matrix.labels[m.target] + "): " + *m.witness;
    }
    cr.cells.push_back(std::move(cell));
  }
  for (const auto& t : rep.triangles) {
    cr.cells.push_back({{{"triangle", static_cast<long>(t.r)},
                         {"verdict", std::string(to_string(t.verdict))},
                         {"cone_nonzero", nonzero_cells(t.cone)},
                         {"divisor_nonzero", nonzero_cells(t.divisor)}}});
  }
  for (const auto& w : rep.witnesses) {
    std::vector<std::string> steps;
    for (const auto& s : w.steps) {
      std::string line = s.kind + " -> O(" + std::to_string(s.target) + ") from {";
      for (std::size_t i = 0; i < s.sources.size(); ++i) line += (i ? "," : "") + std::to_string(s.sources[i]);
      line += "}: " + std::string(to_string(s.verdict)) + "; " + s.detail;
      steps.push_back(std::move(line));
    }
    cr.cells.push_back({{{"generation_target", static_cast<long>(w.target)},
                         {"verdict", std::string(to_string(w.verdict))},
                         {"steps", steps}}});
  }
  out.push_back(std::move(cr));

  const auto weights = cx.centre.weights();
  const int total = cx.centre.total_weight();
  const SupportCheck sc = resolution_support_check(weights, -total, total, cx.job.truncation);
  CheckResult sr{"resolution-support", sc.verdict, {}, sc.witness, 0};
  for (const auto& c : sc.homology.cells) sr.cells.push_back(dim_cell(c, "homological_index"));
  for (const auto& a : sc.annihilation) {
    sr.cells.push_back({{{"homological_index", static_cast<long>(a.index)},
                         {"degree", degree_pair(a.degree)},
                         {"variable", static_cast<long>(a.variable)},
                         {"power", static_cast<long>(a.power)}}});
  }
  out.push_back(std::move(sr));
}

}  // namespace

RunReport run(const JobSpec& job) {
  job.truncation.validate();
  GradedRing base = make_base_ring(job.vars, job.relations);
  std::vector<CentreEntry> entries;
  for (const auto& e : job.centre) entries.push_back({base.parse(e.poly), e.weight});
  WeightedCentre centre(base, entries);
  BlowupPresentation bp = extended_rees_presentation(centre);
  const Context cx{job, std::move(base), std::move(centre), std::move(bp)};

  using Runner = std::function<void(const Context&, std::vector<CheckResult>&)>;
  const std::vector<std::pair<std::string, Runner>> table = {
      {"koszul-check", koszul_checks},   {"rees-gens", rees_gens_check},
      {"rees-verify", rees_verify_check}, {"proj-coh", proj_coh_check},
      {"blowup-coh", blowup_coh_check},   {"pushforward-check", pushforward_check},
      {"sod-verify", sod_checks}};

  RunReport report;
  report.version = WBLOW_VERSION;
  report.job = job;
  for (const auto& [name, fn] : table) {
    if (job.command != "all" && job.command != name) continue;
    const auto start = std::chrono::steady_clock::now();
    const std::size_t first = report.checks.size();
    fn(cx, report.checks);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const std::size_t added = report.checks.size() - first;
    for (std::size_t i = first; i < report.checks.size(); ++i) report.checks[i].timing_ms = ms / added;
  }
  return report;
}

}  // namespace wblow
