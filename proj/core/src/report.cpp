#include "wblow/job.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace wblow {

using json = nlohmann::ordered_json;

namespace {

json job_to_json(const JobSpec& job) {
  json j;
  j["base_ring"] = {{"vars", job.vars}, {"relations", job.relations}};
  j["centre"] = json::array();
  for (const auto& e : job.centre) j["centre"].push_back({{"poly", e.poly}, {"weight", e.weight}});
  j["twist_window"] = {job.r_min, job.r_max};
  j["truncation"] = {
      {"initial", job.truncation.bound}, {"step", job.truncation.step}, {"max", job.truncation.max_bound}};
  j["command"] = job.command;
  j["format"] = job.format;
  if (!job.presentation.empty()) {
    j["presentation"] = json::array();
    for (const auto& g : job.presentation) {
      j["presentation"].push_back({{"name", g.name}, {"image", g.image}, {"degree", g.degree}});
    }
  }
  j["aux_max"] = job.aux_max;
  return j;
}

JobSpec job_from_json(const json& j) {
  JobSpec job;
  job.vars = j.at("base_ring").at("vars").get<std::vector<std::string>>();
  job.relations = j.at("base_ring").at("relations").get<std::vector<std::string>>();
  for (const auto& e : j.at("centre")) job.centre.push_back({e.at("poly").get<std::string>(), e.at("weight").get<int>()});
  job.r_min = j.at("twist_window").at(0).get<int>();
  job.r_max = j.at("twist_window").at(1).get<int>();
  job.truncation = {j.at("truncation").at("initial").get<int>(), j.at("truncation").at("step").get<int>(),
                    j.at("truncation").at("max").get<int>()};
  job.command = j.at("command").get<std::string>();
  job.format = j.at("format").get<std::string>();
  if (j.contains("presentation")) {
    for (const auto& g : j.at("presentation")) {
      job.presentation.push_back(
          {g.at("name").get<std::string>(), g.at("image").get<std::string>(), g.at("degree").get<int>()});
    }
  }
  job.aux_max = j.at("aux_max").get<int>();
  return job;
}

json value_to_json(const CellValue& v) {
  return std::visit([](const auto& x) { return json(x); }, v);
}

CellValue value_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    // An empty array has no element type; integer arrays are the default.
    if (j.empty() || j.front().is_number_integer()) return j.get<std::vector<long>>();
    return j.get<std::vector<std::string>>();
  }
  throw std::invalid_argument("unsupported cell value " + j.dump());
}

Verdict verdict_from(const std::string& s) {
  if (s == "PASS") return Verdict::Pass;
  if (s == "FAIL") return Verdict::Fail;
  if (s == "INCONCLUSIVE") return Verdict::Inconclusive;
  throw std::invalid_argument("unknown verdict " + s);
}

std::string value_text(const CellValue& v) {
  struct {
    std::string operator()(bool b) const { return b ? "yes" : "no"; }
    std::string operator()(long x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<long>& xs) const {
      std::string s = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
      return s + "]";
    }
    std::string operator()(const std::vector<std::string>& xs) const {
      std::string s = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "; " : "") + xs[i];
      return s + "]";
    }
  } visitor;
  return std::visit(visitor, v);
}

bool empty_array(const CellValue& v) {
  if (const auto* a = std::get_if<std::vector<long>>(&v)) return a->empty();
  if (const auto* a = std::get_if<std::vector<std::string>>(&v)) return a->empty();
  return false;
}

}  // namespace

bool operator==(const ReportCell& a, const ReportCell& b) {
  if (a.fields.size() != b.fields.size()) return false;
  for (std::size_t i = 0; i < a.fields.size(); ++i) {
    if (a.fields[i].first != b.fields[i].first) return false;
    const CellValue& x = a.fields[i].second;
    const CellValue& y = b.fields[i].second;
    if (!(x == y) && !(empty_array(x) && empty_array(y))) return false;
  }
  return true;
}

std::string report_to_json(const RunReport& report, bool with_timing) {
  json j;
  j["version"] = report.version;
  j["job"] = job_to_json(report.job);
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    json cj;
    cj["name"] = c.name;
    cj["verdict"] = std::string(to_string(c.verdict));
    cj["cells"] = json::array();
    for (const auto& cell : c.cells) {
      json o = json::object();
      for (const auto& [k, v] : cell.fields) o[k] = value_to_json(v);
      cj["cells"].push_back(std::move(o));
    }
    if (c.witness) cj["witness"] = *c.witness;
    if (with_timing) cj["timing_ms"] = c.timing_ms;
    j["checks"].push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
  const json j = json::parse(text);
  RunReport r;
  r.version = j.at("version").get<std::string>();
  r.job = job_from_json(j.at("job"));
  for (const auto& cj : j.at("checks")) {
    CheckResult c;
    c.name = cj.at("name").get<std::string>();
    c.verdict = verdict_from(cj.at("verdict").get<std::string>());
    for (const auto& o : cj.at("cells")) {
      ReportCell cell;
      for (const auto& [k, v] : o.items()) cell.fields.push_back({k, value_from_json(v)});
      c.cells.push_back(std::move(cell));
    }
    if (cj.contains("witness")) c.witness = cj.at("witness").get<std::string>();
    if (cj.contains("timing_ms")) c.timing_ms = cj.at("timing_ms").get<double>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string report_to_table(const RunReport& report) {
  std::ostringstream os;
  os << "wblow " << report.version << "  command: " << report.job.command << "\n";
  for (const auto& c : report.checks) {
    os << "\n== " << c.name << ": " << to_string(c.verdict) << "\n";
    if (c.witness) os << "   witness: " << *c.witness << "\n";

    // Cells with identical key lists share a header and column widths.
    std::size_t i = 0;
    while (i < c.cells.size()) {
      std::vector<std::string> keys;
      for (const auto& [k, v] : c.cells[i].fields) keys.push_back(k);
      std::size_t end = i;
      auto same = [&](const ReportCell& cell) {
        if (cell.fields.size() != keys.size()) return false;
        for (std::size_t t = 0; t < keys.size(); ++t) {
          if (cell.fields[t].first != keys[t]) return false;
        }
        return true;
      };
      while (end < c.cells.size() && same(c.cells[end])) ++end;

      std::vector<std::size_t> width;
      for (const auto& k : keys) width.push_back(k.size());
      for (std::size_t r = i; r < end; ++r) {
        for (std::size_t t = 0; t < keys.size(); ++t) {
          width[t] = std::max(width[t], value_text(c.cells[r].fields[t].second).size());
        }
      }
      os << "  ";
      for (std::size_t t = 0; t < keys.size(); ++t) os << std::left << std::setw(static_cast<int>(width[t]) + 2) << keys[t];
      os << "\n";
      for (std::size_t r = i; r < end; ++r) {
        os << "  ";
        for (std::size_t t = 0; t < keys.size(); ++t) {
          os << std::left << std::setw(static_cast<int>(width[t]) + 2) << value_text(c.cells[r].fields[t].second);
        }
        os << "\n";
      }
      i = end;
    }
  }
  return os.str();
}

}  // namespace wblow
