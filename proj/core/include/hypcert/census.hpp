#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hypcert/certify.hpp"
#include "hypcert/snap.hpp"

namespace hypcert {

// One batched file: either a finished report or the reading error that
// prevented one. Failures never abort the batch.
struct BatchRun {
  std::filesystem::path file;
  std::optional<CertificationReport> report;
  std::string error;
};

struct CensusSummary {
  int total = 0;
  int certified = 0;
  int inapplicable = 0;
  int failed_inequality = 0;
  int errors = 0;
  // Largest residual norm over certified runs.
  std::optional<HPReal> maxnormb;
  // Smallest over all runs of the larger computed threshold.
  std::optional<HPReal> minmaxvalue;
  std::vector<BatchRun> runs;
};

// Certifies every file in order (deterministic, sequential).
CensusSummary run_batch(const std::vector<std::filesystem::path>& files,
                        const RunOptions& opts, SnapFormat format = SnapFormat::Auto);

// Regular files in `dir`, sorted by filename.
std::vector<std::filesystem::path> batch_files(const std::filesystem::path& dir);

// Per-file verdict lines; `stats` appends the aggregate block.
std::string render_summary(const CensusSummary& s, bool stats);

}  // namespace hypcert
