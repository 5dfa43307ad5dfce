#include "wblow/job.hpp"
#include "wblow/total_complex.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Weighted blowup verification jobs"};
  std::string job_path;
  std::string out_path;
  std::string format;
  int threads = 1;
  bool no_timing = false;
  app.add_option("--job", job_path, "job description (JSON)")->required();
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json or table (overrides the job)")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", threads, "worker threads for independent degrees")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "omit timing_ms from JSON reports");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : wblow::kInputErrorExit;
  }

  std::ifstream in(job_path);
  if (!in) {
    std::cerr << "error: cannot read " << job_path << "\n";
    return wblow::kInputErrorExit;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  wblow::JobSpec job;
  try {
    job = wblow::parse_job(buf.str());
  } catch (const wblow::JobError& e) {
    std::cerr << job_path << ": error: " << e.what() << "\n";
    return wblow::kInputErrorExit;
  }
  if (!format.empty()) job.format = format;
  wblow::set_thread_count(threads);

  wblow::RunReport report;
  try {
    report = wblow::run(job);
  } catch (const std::invalid_argument& e) {
    std::cerr << job_path << ": error: " << e.what() << "\n";
    return wblow::kInputErrorExit;
  }

  const std::string text =
      job.format == "table" ? wblow::report_to_table(report) : wblow::report_to_json(report, !no_timing);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return wblow::kInputErrorExit;
    }
    out << text;
  }
  return wblow::exit_code(report);
}
