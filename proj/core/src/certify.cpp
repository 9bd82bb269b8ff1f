#include "hypcert/certify.hpp"

#include <string>
#include <utility>

#include "hypcert/eigen.hpp"
#include "hypcert/errors.hpp"

namespace hypcert {

namespace {

Precision vector_precision(const std::vector<HPComplex>& a) {
  Precision p(Precision::kMinDigits);
  for (const HPComplex& z : a) {
    p = max(p, z.precision());
  }
  return p;
}

void check_off_branch_cut(const std::vector<HPComplex>& a) {
  for (size_t j = 0; j < a.size(); ++j) {
    if (!(a[j].im > HPReal())) {
      throw BranchCutProximity("shape " + std::to_string(j + 1) +
                                   " touches the logarithm branch cut",
                               static_cast<int>(j + 1));
    }
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "CERTIFIED";
    case Verdict::FailedInequality:
      return "FAILED_INEQUALITY";
    case Verdict::Inapplicable:
    default:
      return "INAPPLICABLE";
  }
}

Residual evaluate_residual(const SelectedSystem& sys, const std::vector<HPComplex>& a) {
  const int n = sys.n;
  if (static_cast<int>(a.size()) != n) {
    throw DimensionMismatch("shape vector length disagrees with the system");
  }
  check_off_branch_cut(a);
  Precision p = vector_precision(a);

  std::vector<HPComplex> log_a;
  std::vector<HPComplex> log_one_minus_a;
  log_a.reserve(a.size());
  log_one_minus_a.reserve(a.size());
  const HPComplex one(1, 0, p);
  for (const HPComplex& z : a) {
    log_a.push_back(log(z));
    log_one_minus_a.push_back(log(one - z));
  }
  const HPComplex pi_i(HPReal(p), pi(p));

  Residual r;
  r.b.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    HPComplex sum(p);
    for (int j = 0; j < n; ++j) {
      const mpz_class& tp = sys.t.at(i, j);
      if (tp != 0) {
        sum += mul_int(log_a[static_cast<size_t>(j)], tp);
      }
      const mpz_class& tpp = sys.t.at(i, n + j);
      if (tpp != 0) {
        sum += mul_int(log_one_minus_a[static_cast<size_t>(j)], tpp);
      }
    }
    const mpz_class& tc = sys.t.at(i, 2 * n);
    if (tc != 0) {
      sum += mul_int(pi_i, tc);
    }
    r.b.push_back(std::move(sum));
  }
  r.norm_b = euclidean_norm(r.b);
  return r;
}

HPMatrix jacobian(const SelectedSystem& sys, const std::vector<HPComplex>& a) {
  const int n = sys.n;
  if (static_cast<int>(a.size()) != n) {
    throw DimensionMismatch("shape vector length disagrees with the system");
  }
  check_off_branch_cut(a);
  Precision p = vector_precision(a);

  std::vector<HPComplex> inv_a;
  std::vector<HPComplex> inv_one_minus_a;
  inv_a.reserve(a.size());
  inv_one_minus_a.reserve(a.size());
  const HPComplex one(1, 0, p);
  for (const HPComplex& z : a) {
    inv_a.push_back(reciprocal(z));
    inv_one_minus_a.push_back(reciprocal(one - z));
  }

  HPMatrix jac(n, n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      HPComplex entry(p);
      const mpz_class& tp = sys.t.at(i, j);
      if (tp != 0) {
        entry += mul_int(inv_a[static_cast<size_t>(j)], tp);
      }
      const mpz_class& tpp = sys.t.at(i, n + j);
      if (tpp != 0) {
        entry -= mul_int(inv_one_minus_a[static_cast<size_t>(j)], tpp);
      }
      jac.at(i, j) = std::move(entry);
    }
  }
  return jac;
}

NewtonStep newton_step(const HPMatrix& jac, const Residual& r,
                       const std::vector<HPComplex>& a) {
  std::vector<HPComplex> rhs;
  rhs.reserve(r.b.size());
  for (const HPComplex& z : r.b) {
    rhs.push_back(-z);
  }
  NewtonStep step;
  try {
    step.hh = solve_linear(jac, rhs);
  } catch (const SingularMatrix& e) {
    throw SingularJacobian(e.what());
  }
  step.norm_hh = euclidean_norm(step.hh);
  step.a_tilde.reserve(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    step.a_tilde.push_back(a[j] + step.hh[j]);
  }
  return step;
}

TestTriple applicability_tests(const std::vector<HPComplex>& a, const NewtonStep& step) {
  TestTriple t;
  t.pass1 = t.pass2 = t.pass3 = true;
  const HPReal& hh = step.norm_hh;
  for (size_t j = 0; j < a.size(); ++j) {
    if (t.pass1 && !(step.a_tilde[j].im > hh)) {
      t.pass1 = false;
      t.fail1 = static_cast<int>(j + 1);
    }
    if (t.pass2 && !(hh < abs(a[j]) / 2)) {
      t.pass2 = false;
      t.fail2 = static_cast<int>(j + 1);
    }
    const HPComplex one_minus(HPReal(1, a[j].precision()) - a[j].re, -a[j].im);
    if (t.pass3 && !(hh < abs(one_minus) / 2)) {
      t.pass3 = false;
      t.fail3 = static_cast<int>(j + 1);
    }
  }
  return t;
}

HPReal lipschitz_ratio(const SelectedSystem& sys, const std::vector<HPComplex>& a,
                       const HPReal& norm_hh) {
  const int n = sys.n;
  if (static_cast<int>(a.size()) != n) {
    throw DimensionMismatch("shape vector length disagrees with the system");
  }
  Precision p = max(vector_precision(a), norm_hh.precision());
  const HPComplex one(1, 0, p);
  const HPReal two_hh = 2 * norm_hh;

  std::vector<HPReal> da;
  std::vector<HPReal> db;
  da.reserve(a.size());
  db.reserve(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    HPReal d1 = abs(a[j]) - two_hh;
    HPReal d2 = abs(one - a[j]) - two_hh;
    if (!(d1 > HPReal()) || !(d2 > HPReal())) {
      throw PrereqTestFailed("shape " + std::to_string(j + 1) +
                             " lies within 2|hh| of a branch point; run the "
                             "applicability tests first");
    }
    da.push_back(d1 * d1);
    db.push_back(d2 * d2);
  }

  HPReal sum(p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      HPReal c(p);
      const mpz_class& tp = sys.t.at(i, j);
      if (tp != 0) {
        HPReal num(p);
        mpfr_set_z(num.raw(), mpz_class(abs(tp)).get_mpz_t(), MPFR_RNDN);
        c += num / da[static_cast<size_t>(j)];
      }
      const mpz_class& tpp = sys.t.at(i, n + j);
      if (tpp != 0) {
        HPReal num(p);
        mpfr_set_z(num.raw(), mpz_class(abs(tpp)).get_mpz_t(), MPFR_RNDN);
        c += num / db[static_cast<size_t>(j)];
      }
      sum += c * c;
    }
  }
  return sqrt(sum);
}

HPReal inverse_norm_sup(const HPMatrix& jac) {
  const int n = jac.rows();
  Precision p = jac.working_precision();
  HPMatrix d(n, n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      HPComplex sum(p);
      for (int m = 0; m < n; ++m) {
        sum += jac.at(m, i) * conj(jac.at(m, j));
      }
      d.at(i, j) = std::move(sum);
    }
  }
  std::vector<HPReal> eigenvalues = hermitian_eigenvalues(d);
  return HPReal(1, p) / sqrt(eigenvalues.front());
}

HPReal inverse_norm_len(const HPMatrix& jac) {
  HPMatrix inv = [&] {
    try {
      return invert(jac);
    } catch (const SingularMatrix& e) {
      throw SingularJacobian(e.what());
    }
  }();
  return frobenius_norm(inv);
}

std::pair<HPReal, HPReal> inverse_norms(const HPMatrix& jac) {
  return {inverse_norm_sup(jac), inverse_norm_len(jac)};
}

namespace {

CertificationReport run_pipeline(const ManifoldProblem& p, const RunOptions& opts,
                                 const Residual* forced_residual) {
  CertificationReport report;
  report.name = p.name;
  report.n = p.n;
  report.k = p.k;
  report.h = p.h;
  report.precision_digits = opts.precision.digits();
  try {
    std::vector<HPComplex> a = p.shapes_at(opts.precision);
    SelectedSystem sys = select_rows(p);
    report.selected_rows = sys.selected_rows;

    Residual residual =
        forced_residual ? *forced_residual : evaluate_residual(sys, a);
    report.residual = residual;

    HPMatrix jac = jacobian(sys, a);
    HPComplex det = determinant(jac);
    report.det_a = det;
    if (det.is_zero()) {
      throw SingularJacobian("Jacobian determinant is zero");
    }

    NewtonStep step = newton_step(jac, residual, a);
    report.newton = step;

    TestTriple tests = applicability_tests(a, step);
    report.tests = tests;
    if (!tests.all()) {
      int which = !tests.pass1 ? 1 : (!tests.pass2 ? 2 : 3);
      int index = !tests.pass1 ? tests.fail1 : (!tests.pass2 ? tests.fail2 : tests.fail3);
      report.verdict = Verdict::Inapplicable;
      report.reason =
          "test" + std::to_string(which) + " failed at j=" + std::to_string(index);
      return report;
    }

    HPReal l = lipschitz_ratio(sys, a, step.norm_hh);
    report.lipschitz_l = l;

    const HPReal two_l = 2 * l;
    const HPReal one(1, opts.precision);
    bool any_pass = false;
    bool any_fail = false;
    if (opts.norm_mode == NormMode::Sup || opts.norm_mode == NormMode::Both) {
      HPReal ns = inverse_norm_sup(jac);
      HPReal threshold = one / (two_l * ns * ns);
      report.norm_sup = ns;
      report.threshold_sup = threshold;
      report.margin_sup = threshold / residual.norm_b;
      bool pass = residual.norm_b <= threshold;
      report.pass_sup = pass;
      (pass ? any_pass : any_fail) = true;
    }
    if (opts.norm_mode == NormMode::Len || opts.norm_mode == NormMode::Both) {
      HPReal nl = inverse_norm_len(jac);
      HPReal threshold = one / (two_l * nl * nl);
      report.norm_len = nl;
      report.threshold_len = threshold;
      report.margin_len = threshold / residual.norm_b;
      bool pass = residual.norm_b <= threshold;
      report.pass_len = pass;
      (pass ? any_pass : any_fail) = true;
    }

    if (any_pass) {
      report.verdict = Verdict::Certified;
    } else {
      report.verdict = Verdict::FailedInequality;
      report.reason = "residual exceeds every requested threshold";
    }
  } catch (const Error& e) {
    report.verdict = Verdict::Inapplicable;
    report.reason = e.what();
  }
  return report;
}

}  // namespace

CertificationReport certify(const ManifoldProblem& p, const RunOptions& opts) {
  return run_pipeline(p, opts, nullptr);
}

CertificationReport certify_with_residual(const ManifoldProblem& p, const RunOptions& opts,
                                          const Residual& forced) {
  return run_pipeline(p, opts, &forced);
}

}  // namespace hypcert
