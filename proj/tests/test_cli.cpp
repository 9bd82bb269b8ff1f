#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "hypcert_cli_io";
  fs::create_directories(dir);
  const int id = ++counter;
  const fs::path out = dir / ("out" + std::to_string(id) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(id) + ".txt");
  std::string cmd = std::string(HYPCERT_CLI_PATH) + " " + args + " > " + out.string() +
                    " 2> " + err.string();
  int status = std::system(cmd.c_str());
  CliResult result;
  if (status != -1 && WIFEXITED(status)) {
    result.code = WEXITSTATUS(status);
  }
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

}  // namespace

TEST_CASE("a certified manifold exits zero with a text report") {
  CliResult r = run_cli(fixture_path("fig8.mfd"));
  CHECK(r.code == 0);
  CHECK(r.out.find("manifold fig8  (n=2, k=1, h=1, precision=60)") == 0);
  CHECK(r.out.find("verdict         = CERTIFIED") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("a failed inequality exits three") {
  CliResult r = run_cli(fixture_path("fig8_perturbed.mfd"));
  CHECK(r.code == 3);
  CHECK(r.out.find("verdict         = FAILED_INEQUALITY") != std::string::npos);
}

TEST_CASE("an inapplicable run exits two") {
  CliResult r = run_cli(fixture_path("fig8_badapprox.mfd"));
  CHECK(r.code == 2);
  CHECK(r.out.find("INAPPLICABLE (test1 failed at j=1)") != std::string::npos);
}

TEST_CASE("unreadable or invalid inputs exit one") {
  CHECK(run_cli(fixture_path("fig8_nongeometric.mfd")).code == 1);
  CliResult missing = run_cli("/no/such/file.mfd");
  CHECK(missing.code == 1);
  CHECK(missing.err.find("/no/such/file.mfd") != std::string::npos);
}

TEST_CASE("no inputs at all exit one with a usage hint") {
  CliResult r = run_cli("");
  CHECK(r.code == 1);
  CHECK(r.err.find("no inputs") != std::string::npos);
}

TEST_CASE("the most severe outcome wins across several inputs") {
  CHECK(run_cli(fixture_path("fig8.mfd") + " " + fixture_path("fig8_perturbed.mfd")).code == 3);
  CHECK(run_cli(fixture_path("fig8.mfd") + " " + fixture_path("fig8_badapprox.mfd")).code == 2);
  CHECK(run_cli(fixture_path("fig8_perturbed.mfd") + " " +
                fixture_path("fig8_badapprox.mfd"))
            .code == 3);
  CHECK(run_cli(fixture_path("fig8_badapprox.mfd") + " " +
                fixture_path("fig8_nongeometric.mfd"))
            .code == 1);
}

TEST_CASE("structured reports come out as key=value lines") {
  CliResult r = run_cli("--report structured " + fixture_path("fig8.mfd"));
  CHECK(r.code == 0);
  CHECK(r.out.find("name = fig8\n") == 0);
  CHECK(r.out.find("verdict = CERTIFIED\n") != std::string::npos);
  CHECK(r.out.find("precision = 60\n") != std::string::npos);
}

TEST_CASE("norm selection drops the other bound from the report") {
  CliResult r = run_cli("--norm sup --report structured " + fixture_path("fig8.mfd"));
  CHECK(r.code == 0);
  CHECK(r.out.find("norm_sup = ") != std::string::npos);
  CHECK(r.out.find("norm_len") == std::string::npos);
  CHECK(r.out.find("threshold_len") == std::string::npos);
}

TEST_CASE("transcripts need the matching format flag") {
  CliResult canonical = run_cli(fixture_path("fig8_transcript.txt"));
  CHECK(canonical.code == 1);
  CliResult transcript = run_cli("--format transcript " + fixture_path("fig8_transcript.txt"));
  CHECK(transcript.code == 0);
  CHECK(transcript.out.find("manifold fig8") == 0);
  CHECK(transcript.out.find("verdict         = CERTIFIED") != std::string::npos);
}

TEST_CASE("flag validation failures exit one") {
  CHECK(run_cli("--no-such-flag " + fixture_path("fig8.mfd")).code == 1);
  CHECK(run_cli("--norm bogus " + fixture_path("fig8.mfd")).code == 1);
  CHECK(run_cli("--precision 10 " + fixture_path("fig8.mfd")).code == 1);
  CHECK(run_cli("--report yaml " + fixture_path("fig8.mfd")).code == 1);
}

TEST_CASE("the precision flag reaches the pipeline") {
  CliResult r = run_cli("--precision 80 --report structured " + fixture_path("fig8.mfd"));
  CHECK(r.code == 0);
  CHECK(r.out.find("precision = 80\n") != std::string::npos);
}

TEST_CASE("output never varies between identical invocations") {
  std::string args = "--report structured " + fixture_path("whitehead_9872_11111.mfd");
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CliResult ta = run_cli(fixture_path("whitehead_9872_11111.mfd"));
  CliResult tb = run_cli(fixture_path("whitehead_9872_11111.mfd"));
  CHECK(ta.out == tb.out);
}

TEST_CASE("a batch folds every file into one summary and exit code") {
  const fs::path dir = fs::temp_directory_path() / "hypcert_cli_batch";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy_file(fixture_path("fig8.mfd"), dir / "fig8.mfd");
  fs::copy_file(fixture_path("fig8_perturbed.mfd"), dir / "fig8_perturbed.mfd");
  fs::copy_file(fixture_path("fig8_badapprox.mfd"), dir / "fig8_badapprox.mfd");
  std::ofstream(dir / "zz_garbage.mfd") << "not a manifold\n";

  const fs::path out_dir = dir / "reports";
  CliResult r = run_cli("--batch " + dir.string() + " --stats --out " + out_dir.string());
  CHECK(r.code == 1);
  CHECK(r.out.find("fig8.mfd: CERTIFIED") != std::string::npos);
  CHECK(r.out.find("fig8_perturbed.mfd: FAILED_INEQUALITY") != std::string::npos);
  CHECK(r.out.find("fig8_badapprox.mfd: INAPPLICABLE (test1 failed at j=1)") !=
        std::string::npos);
  CHECK(r.out.find("zz_garbage.mfd: ERROR (") != std::string::npos);
  CHECK(r.out.find("total = 4") != std::string::npos);
  CHECK(r.out.find("certified = 1") != std::string::npos);
  CHECK(r.out.find("inapplicable = 1") != std::string::npos);
  CHECK(r.out.find("failed_inequality = 1") != std::string::npos);
  CHECK(r.out.find("errors = 1") != std::string::npos);

  CHECK(fs::exists(out_dir / "fig8.report"));
  CHECK(fs::exists(out_dir / "fig8_perturbed.report"));
  CHECK(fs::exists(out_dir / "summary.txt"));
  std::string report = slurp(out_dir / "fig8.report");
  CHECK(report.find("name = fig8\n") == 0);
  CHECK(report.find("verdict = CERTIFIED\n") != std::string::npos);
  std::string summary = slurp(out_dir / "summary.txt");
  CHECK(summary.find("total = 4") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("a clean batch exits zero") {
  const fs::path dir = fs::temp_directory_path() / "hypcert_cli_batch_clean";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy_file(fixture_path("fig8.mfd"), dir / "fig8.mfd");
  fs::copy_file(fixture_path("whitehead_9872_11111.mfd"), dir / "whitehead.mfd");
  CliResult r = run_cli("--batch " + dir.string() + " --stats");
  CHECK(r.code == 0);
  CHECK(r.out.find("certified = 2") != std::string::npos);
  CHECK(r.out.find("maxnormb = 6.290546043622649509854067366063508951285E-24") !=
        std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("single-input runs honor the out directory") {
  const fs::path dir = fs::temp_directory_path() / "hypcert_cli_single_out";
  fs::remove_all(dir);
  CliResult r = run_cli("--out " + dir.string() + " " + fixture_path("fig8.mfd"));
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "fig8.report"));
  std::string report = slurp(dir / "fig8.report");
  CHECK(report.find("name = fig8\n") == 0);
  CHECK(report.find("norm_b = ") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("diagnostics append to the log file") {
  const fs::path dir = fs::temp_directory_path() / "hypcert_cli_log";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path log = dir / "run.log";
  CliResult r = run_cli("--log " + log.string() + " /no/such/file.mfd");
  CHECK(r.code == 1);
  std::string logged = slurp(log);
  CHECK(logged.find("/no/such/file.mfd") != std::string::npos);
  run_cli("--log " + log.string() + " /no/such/file.mfd");
  std::string twice = slurp(log);
  CHECK(twice.size() > logged.size());
  fs::remove_all(dir);
}
