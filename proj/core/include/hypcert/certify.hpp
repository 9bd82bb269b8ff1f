#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypcert/hp_linalg.hpp"
#include "hypcert/manifold.hpp"
#include "hypcert/selection.hpp"

namespace hypcert {

enum class NormMode { Sup, Len, Both };

struct RunOptions {
  Precision precision{Precision::kDefaultDigits};
  NormMode norm_mode = NormMode::Both;
};

// Value of the selected log-form system at the approximate shapes, plus its
// Euclidean length.
struct Residual {
  std::vector<HPComplex> b;
  HPReal norm_b;
};

struct NewtonStep {
  std::vector<HPComplex> hh;  // the correction -J(a)^-1 f(a)
  HPReal norm_hh;
  std::vector<HPComplex> a_tilde;
};

// The three strict applicability tests, with the first failing shape index
// (1-based) for each, or -1 when the test passed.
struct TestTriple {
  bool pass1 = false;
  bool pass2 = false;
  bool pass3 = false;
  int fail1 = -1;
  int fail2 = -1;
  int fail3 = -1;
  bool all() const noexcept { return pass1 && pass2 && pass3; }
};

enum class Verdict { Certified, Inapplicable, FailedInequality };

std::string to_string(Verdict v);

struct CertificationReport {
  std::string name;
  int n = 0;
  int k = 0;
  int h = 0;
  int precision_digits = 0;
  std::vector<int> selected_rows;
  std::optional<Residual> residual;
  std::optional<HPComplex> det_a;
  std::optional<NewtonStep> newton;
  std::optional<TestTriple> tests;
  std::optional<HPReal> lipschitz_l;
  std::optional<HPReal> norm_sup;
  std::optional<HPReal> norm_len;
  std::optional<HPReal> threshold_sup;
  std::optional<HPReal> threshold_len;
  std::optional<HPReal> margin_sup;
  std::optional<HPReal> margin_len;
  std::optional<bool> pass_sup;
  std::optional<bool> pass_len;
  Verdict verdict = Verdict::Inapplicable;
  std::string reason;
};

// f_i(a) = sum_j t'_ij Log(a_j) + t''_ij Log(1 - a_j) + t'''_i * pi*i, the
// constant column added with its stored sign. Shapes must avoid the log
// branch cuts (BranchCutProximity otherwise).
Residual evaluate_residual(const SelectedSystem& sys, const std::vector<HPComplex>& a);

// A[i][j] = t'_ij / a_j - t''_ij / (1 - a_j).
HPMatrix jacobian(const SelectedSystem& sys, const std::vector<HPComplex>& a);

// Solves J hh = -b; a numerically singular Jacobian raises SingularJacobian.
NewtonStep newton_step(const HPMatrix& jac, const Residual& r,
                       const std::vector<HPComplex>& a);

// Test 1: Im(a~_j) > |hh|. Test 2: |hh| < |a_j| / 2. Test 3:
// |hh| < |1 - a_j| / 2. All strict.
TestTriple applicability_tests(const std::vector<HPComplex>& a, const NewtonStep& step);

// L = sqrt(sum of c_ij^2) with c_ij = |t'_ij| / (|a_j| - 2|hh|)^2 +
// |t''_ij| / (|1 - a_j| - 2|hh|)^2. Requires the test-2/3 margins
// (PrereqTestFailed otherwise).
HPReal lipschitz_ratio(const SelectedSystem& sys, const std::vector<HPComplex>& a,
                       const HPReal& norm_hh);

// Operator norms of J^-1: the sup bound 1 / sqrt(lambda_min(D)) with
// D[i][j] = sum_m A[m][i] * conj(A[m][j]), and the Frobenius norm of the
// explicit inverse.
HPReal inverse_norm_sup(const HPMatrix& jac);
HPReal inverse_norm_len(const HPMatrix& jac);
std::pair<HPReal, HPReal> inverse_norms(const HPMatrix& jac);

// Full pipeline. Never throws: every library error becomes an
// INAPPLICABLE verdict with the failure reason.
CertificationReport certify(const ManifoldProblem& p, const RunOptions& opts = {});

// Test seam: runs the same pipeline with the residual replaced after
// evaluation, to exercise downstream gates on synthetic values.
CertificationReport certify_with_residual(const ManifoldProblem& p, const RunOptions& opts,
                                          const Residual& forced);

}  // namespace hypcert
