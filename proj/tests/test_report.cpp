#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "hypcert/certify.hpp"
#include "hypcert/errors.hpp"
#include "hypcert/report.hpp"
#include "hypcert/snap.hpp"
#include "test_support.hpp"

using hypcert::CertificationReport;
using hypcert::ManifoldProblem;
using hypcert::ReportFields;
using hypcert::ReportMode;

namespace {

CertificationReport certify_fixture(const char* file) {
  ManifoldProblem p = hypcert::read_manifold_file(fixture_path(file));
  return hypcert::certify(p, {});
}

std::vector<std::string> keys_of(const ReportFields& fields) {
  std::vector<std::string> keys;
  keys.reserve(fields.size());
  for (const auto& [key, value] : fields) {
    keys.push_back(key);
  }
  return keys;
}

std::string value_of(const ReportFields& fields, const std::string& key) {
  for (const auto& [k, v] : fields) {
    if (k == key) {
      return v;
    }
  }
  return {};
}

}  // namespace

TEST_CASE("structured fields follow the fixed order when every stage ran") {
  CertificationReport r = certify_fixture("fig8.mfd");
  ReportFields fields = hypcert::structured_fields(r);
  std::vector<std::string> expected{
      "name",          "n",           "k",          "h",
      "verdict",       "norm_b",      "det_a",      "norm_hh",
      "test1",         "test2",       "test3",      "lipschitz_l",
      "norm_sup",      "norm_len",    "threshold_sup", "threshold_len",
      "margin_sup",    "margin_len",  "selected_rows", "precision"};
  CHECK(keys_of(fields) == expected);
  CHECK(value_of(fields, "verdict") == "CERTIFIED");
  CHECK(value_of(fields, "name") == "fig8");
  CHECK(value_of(fields, "test1") == "pass");
  CHECK(value_of(fields, "selected_rows") == "[1]");
  CHECK(value_of(fields, "precision") == "60");
  // Scalars carry the full working digit count.
  CHECK(value_of(fields, "lipschitz_l").size() >= 60);
}

TEST_CASE("structured text parses back and re-renders byte-identically") {
  CertificationReport r = certify_fixture("fig8.mfd");
  std::string text = hypcert::render_report(r, ReportMode::Structured);
  ReportFields parsed = hypcert::parse_structured(text);
  CHECK(parsed == hypcert::structured_fields(r));
  CHECK(hypcert::render_structured(parsed) == text);
}

TEST_CASE("a failing-test report omits the stages that never ran") {
  CertificationReport r = certify_fixture("fig8_badapprox.mfd");
  ReportFields fields = hypcert::structured_fields(r);
  CHECK(value_of(fields, "verdict") == "INAPPLICABLE(test1 failed at j=1)");
  CHECK(value_of(fields, "test1") == "fail j=1");
  std::vector<std::string> keys = keys_of(fields);
  for (const std::string& absent : {"lipschitz_l", "norm_sup", "norm_len", "threshold_sup",
                                    "threshold_len", "margin_sup", "margin_len"}) {
    CAPTURE(absent);
    CHECK(std::find(keys.begin(), keys.end(), absent) == keys.end());
  }
  // Values containing '=' survive the round trip; the parser splits at the
  // first '=' only.
  std::string text = hypcert::render_structured(fields);
  ReportFields parsed = hypcert::parse_structured(text);
  CHECK(parsed == fields);
  CHECK(hypcert::render_structured(parsed) == text);
}

TEST_CASE("parse_structured rejects a line without a separator") {
  CHECK_THROWS_AS(hypcert::parse_structured("name = x\nbroken line\n"), hypcert::ParseError);
}

TEST_CASE("text reports put the headline values in reading order") {
  CertificationReport r = certify_fixture("fig8.mfd");
  std::string text = hypcert::render_report(r, ReportMode::Text);
  size_t header = text.find("manifold fig8  (n=2, k=1, h=1, precision=60)");
  size_t rows = text.find("selected rows");
  size_t normb = text.find("|b|");
  size_t lip = text.find("L ");
  size_t nsup = text.find("|J^-1|_sup");
  size_t tsup = text.find("threshold_sup");
  size_t verdict = text.find("verdict         = CERTIFIED");
  CHECK(header == 0);
  CHECK(rows != std::string::npos);
  CHECK(rows < normb);
  CHECK(normb < lip);
  CHECK(lip < nsup);
  CHECK(nsup < tsup);
  CHECK(tsup < verdict);
  CHECK(text.back() == '\n');
  // 40 significant digits by default, correctly rounded (the lipschitz ratio
  // continues ...1238..., so its 40th digit rounds up to 4).
  CHECK(text.find("1.296666384352891444530724934775173278518E-28") != std::string::npos);
  CHECK(text.find("4.472135954999579392818347339211785668124") != std::string::npos);
}

TEST_CASE("an inapplicable text report names the reason") {
  CertificationReport r = certify_fixture("fig8_badapprox.mfd");
  std::string text = hypcert::render_report(r, ReportMode::Text);
  CHECK(text.find("verdict         = INAPPLICABLE (test1 failed at j=1)") != std::string::npos);
  CHECK(text.find("tests           = fail j=1") != std::string::npos);
}

TEST_CASE("rendering is deterministic across repeated runs") {
  std::string a = hypcert::render_report(certify_fixture("whitehead_9872_11111.mfd"),
                                         ReportMode::Structured);
  std::string b = hypcert::render_report(certify_fixture("whitehead_9872_11111.mfd"),
                                         ReportMode::Structured);
  CHECK(a == b);
  std::string ta =
      hypcert::render_report(certify_fixture("whitehead_9872_11111.mfd"), ReportMode::Text);
  std::string tb =
      hypcert::render_report(certify_fixture("whitehead_9872_11111.mfd"), ReportMode::Text);
  CHECK(ta == tb);
}
