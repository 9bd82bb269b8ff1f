#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hypcert/census.hpp"
#include "hypcert/certify.hpp"
#include "hypcert/errors.hpp"
#include "hypcert/report.hpp"
#include "hypcert/snap.hpp"

namespace {

// Exit codes: 0 certified, 1 parse or I/O failure, 2 inapplicable,
// 3 failed inequality. Across several inputs the most severe one wins,
// with parse failures ranked above numeric outcomes.
int worst(int a, int b) {
  auto rank = [](int code) {
    switch (code) {
      case 1:
        return 3;
      case 3:
        return 2;
      case 2:
        return 1;
      default:
        return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

int verdict_code(hypcert::Verdict v) {
  switch (v) {
    case hypcert::Verdict::Certified:
      return 0;
    case hypcert::Verdict::Inapplicable:
      return 2;
    case hypcert::Verdict::FailedInequality:
      return 3;
  }
  return 2;
}

class Logger {
 public:
  void open(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::app);
    }
  }
  void diag(const std::string& line) {
    std::cerr << line << "\n";
    if (file_.is_open()) {
      file_ << line << "\n";
    }
  }

 private:
  std::ofstream file_;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified hyperbolicity checks for triangulated cusped 3-manifolds"};

  std::vector<std::string> inputs;
  int precision = hypcert::Precision::kDefaultDigits;
  std::string norm = "both";
  std::string format = "canonical";
  std::string report_mode = "text";
  std::string batch_dir;
  std::string out_dir;
  std::string log_path;
  bool stats = false;

  app.add_option("inputs", inputs, "Manifold files to certify");
  app.add_option("--precision", precision, "Working precision in decimal digits (>= 30)")
      ->check(CLI::Range(30, 100000));
  app.add_option("--norm", norm, "Inverse norm(s) to use: sup, len, or both")
      ->check(CLI::IsMember({"sup", "len", "both"}));
  app.add_option("--format", format, "Input format: canonical or transcript")
      ->check(CLI::IsMember({"canonical", "transcript"}));
  app.add_option("--report", report_mode, "Report style: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--batch", batch_dir, "Certify every file in a directory");
  app.add_flag("--stats", stats, "Print census aggregates after a batch");
  app.add_option("--out", out_dir, "Directory for per-run structured reports");
  app.add_option("--log", log_path, "Append diagnostics to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (inputs.empty() && batch_dir.empty()) {
    std::cerr << "no inputs; pass manifold files or --batch <dir>\n";
    return 1;
  }

  Logger log;
  log.open(log_path);

  hypcert::RunOptions opts;
  opts.precision = hypcert::Precision(precision);
  opts.norm_mode = norm == "sup"   ? hypcert::NormMode::Sup
                   : norm == "len" ? hypcert::NormMode::Len
                                   : hypcert::NormMode::Both;
  hypcert::SnapFormat snap_format = format == "transcript"
                                        ? hypcert::SnapFormat::Transcript
                                        : hypcert::SnapFormat::Canonical;
  hypcert::ReportMode mode = report_mode == "structured" ? hypcert::ReportMode::Structured
                                                         : hypcert::ReportMode::Text;

  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      log.diag("cannot create output directory " + out_dir + ": " + ec.message());
      return 1;
    }
  }

  int exit_code = 0;
  bool first_output = true;

  for (const std::string& input : inputs) {
    hypcert::ManifoldProblem problem;
    try {
      problem = hypcert::read_manifold_file(input, snap_format);
    } catch (const std::exception& e) {
      log.diag(input + ": " + e.what());
      exit_code = worst(exit_code, 1);
      continue;
    }
    if (problem.n > 40 && precision < 80) {
      log.diag(problem.name + ": n=" + std::to_string(problem.n) +
               "; consider --precision 80 or higher");
    }
    hypcert::CertificationReport report = hypcert::certify(problem, opts);
    if (!first_output) {
      std::cout << "\n";
    }
    std::cout << hypcert::render_report(report, mode);
    first_output = false;
    if (!out_dir.empty()) {
      write_file(std::filesystem::path(out_dir) / (report.name + ".report"),
                 hypcert::render_report(report, hypcert::ReportMode::Structured));
    }
    exit_code = worst(exit_code, verdict_code(report.verdict));
  }

  if (!batch_dir.empty()) {
    std::vector<std::filesystem::path> files;
    try {
      files = hypcert::batch_files(batch_dir);
    } catch (const std::exception& e) {
      log.diag(e.what());
      return 1;
    }
    hypcert::CensusSummary summary = hypcert::run_batch(files, opts, snap_format);
    if (!first_output) {
      std::cout << "\n";
    }
    std::cout << hypcert::render_summary(summary, stats);
    first_output = false;
    for (const hypcert::BatchRun& run : summary.runs) {
      if (!run.report) {
        log.diag(run.file.string() + ": " + run.error);
        exit_code = worst(exit_code, 1);
        continue;
      }
      if (!out_dir.empty()) {
        write_file(std::filesystem::path(out_dir) / (run.report->name + ".report"),
                   hypcert::render_report(*run.report, hypcert::ReportMode::Structured));
      }
      exit_code = worst(exit_code, verdict_code(run.report->verdict));
    }
    if (!out_dir.empty()) {
      write_file(std::filesystem::path(out_dir) / "summary.txt",
                 hypcert::render_summary(summary, true));
    }
  }

  return exit_code;
}
