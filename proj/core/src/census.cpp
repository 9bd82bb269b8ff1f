#include "hypcert/census.hpp"

#include <algorithm>
#include <sstream>

#include "hypcert/errors.hpp"

namespace hypcert {

CensusSummary run_batch(const std::vector<std::filesystem::path>& files,
                        const RunOptions& opts, SnapFormat format) {
  CensusSummary s;
  for (const std::filesystem::path& file : files) {
    BatchRun run;
    run.file = file;
    ++s.total;
    try {
      ManifoldProblem p = read_manifold_file(file, format);
      run.report = certify(p, opts);
    } catch (const std::exception& e) {
      run.error = e.what();
      ++s.errors;
      s.runs.push_back(std::move(run));
      continue;
    }
    const CertificationReport& report = *run.report;
    switch (report.verdict) {
      case Verdict::Certified:
        ++s.certified;
        break;
      case Verdict::Inapplicable:
        ++s.inapplicable;
        break;
      case Verdict::FailedInequality:
        ++s.failed_inequality;
        break;
    }
    if (report.verdict == Verdict::Certified && report.residual) {
      if (!s.maxnormb || *s.maxnormb < report.residual->norm_b) {
        s.maxnormb = report.residual->norm_b;
      }
    }
    if (report.threshold_sup || report.threshold_len) {
      HPReal larger = report.threshold_sup
                          ? (report.threshold_len
                                 ? max(*report.threshold_sup, *report.threshold_len)
                                 : *report.threshold_sup)
                          : *report.threshold_len;
      if (!s.minmaxvalue || larger < *s.minmaxvalue) {
        s.minmaxvalue = larger;
      }
    }
    s.runs.push_back(std::move(run));
  }
  return s;
}

std::vector<std::filesystem::path> batch_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) {
      files.push_back(entry.path());
    }
  }
  if (ec) {
    throw Error("cannot list directory " + dir.string() + ": " + ec.message());
  }
  std::sort(files.begin(), files.end(),
            [](const std::filesystem::path& a, const std::filesystem::path& b) {
              return a.filename().string() < b.filename().string();
            });
  return files;
}

std::string render_summary(const CensusSummary& s, bool stats) {
  std::ostringstream out;
  for (const BatchRun& run : s.runs) {
    out << run.file.filename().string() << ": ";
    if (run.report) {
      out << to_string(run.report->verdict);
      if (run.report->verdict == Verdict::Inapplicable && !run.report->reason.empty()) {
        out << " (" << run.report->reason << ")";
      }
    } else {
      out << "ERROR (" << run.error << ")";
    }
    out << "\n";
  }
  if (stats) {
    out << "total = " << s.total << "\n";
    out << "certified = " << s.certified << "\n";
    out << "inapplicable = " << s.inapplicable << "\n";
    out << "failed_inequality = " << s.failed_inequality << "\n";
    out << "errors = " << s.errors << "\n";
    out << "maxnormb = " << (s.maxnormb ? s.maxnormb->to_decimal(40) : "n/a") << "\n";
    out << "minmaxvalue = " << (s.minmaxvalue ? s.minmaxvalue->to_decimal(40) : "n/a")
        << "\n";
  }
  return out.str();
}

}  // namespace hypcert
