#include "hypcert/report.hpp"

#include <sstream>

#include "hypcert/errors.hpp"

namespace hypcert {

namespace {

std::string complex_literal(const HPComplex& z, int digits) {
  std::string re = z.re.to_decimal(digits);
  std::string im = z.im.to_decimal(digits);
  if (!im.empty() && im.front() == '-') {
    return re + im + "*I";
  }
  return re + "+" + im + "*I";
}

std::string row_list(const std::vector<int>& rows) {
  std::string out = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(rows[i]);
  }
  return out + "]";
}

std::string test_value(bool pass, int fail_index) {
  if (pass) {
    return "pass";
  }
  return "fail j=" + std::to_string(fail_index);
}

std::string verdict_value(const CertificationReport& r) {
  if (r.verdict == Verdict::Inapplicable) {
    return "INAPPLICABLE(" + r.reason + ")";
  }
  return to_string(r.verdict);
}

}  // namespace

ReportFields structured_fields(const CertificationReport& r) {
  const int digits = r.precision_digits;
  ReportFields f;
  f.emplace_back("name", r.name);
  f.emplace_back("n", std::to_string(r.n));
  f.emplace_back("k", std::to_string(r.k));
  f.emplace_back("h", std::to_string(r.h));
  f.emplace_back("verdict", verdict_value(r));
  if (r.residual) {
    f.emplace_back("norm_b", r.residual->norm_b.to_decimal(digits));
  }
  if (r.det_a) {
    f.emplace_back("det_a", complex_literal(*r.det_a, digits));
  }
  if (r.newton) {
    f.emplace_back("norm_hh", r.newton->norm_hh.to_decimal(digits));
  }
  if (r.tests) {
    f.emplace_back("test1", test_value(r.tests->pass1, r.tests->fail1));
    f.emplace_back("test2", test_value(r.tests->pass2, r.tests->fail2));
    f.emplace_back("test3", test_value(r.tests->pass3, r.tests->fail3));
  }
  if (r.lipschitz_l) {
    f.emplace_back("lipschitz_l", r.lipschitz_l->to_decimal(digits));
  }
  if (r.norm_sup) {
    f.emplace_back("norm_sup", r.norm_sup->to_decimal(digits));
  }
  if (r.norm_len) {
    f.emplace_back("norm_len", r.norm_len->to_decimal(digits));
  }
  if (r.threshold_sup) {
    f.emplace_back("threshold_sup", r.threshold_sup->to_decimal(digits));
  }
  if (r.threshold_len) {
    f.emplace_back("threshold_len", r.threshold_len->to_decimal(digits));
  }
  if (r.margin_sup) {
    f.emplace_back("margin_sup", r.margin_sup->to_decimal(digits));
  }
  if (r.margin_len) {
    f.emplace_back("margin_len", r.margin_len->to_decimal(digits));
  }
  if (!r.selected_rows.empty()) {
    f.emplace_back("selected_rows", row_list(r.selected_rows));
  }
  f.emplace_back("precision", std::to_string(r.precision_digits));
  return f;
}

std::string render_structured(const ReportFields& fields) {
  std::string out;
  for (const auto& [key, value] : fields) {
    out += key;
    out += " = ";
    out += value;
    out += "\n";
  }
  return out;
}

ReportFields parse_structured(std::string_view text) {
  ReportFields fields;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (line.empty()) {
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("structured report line lacks '='",
                       static_cast<size_t>(line.data() - text.data()));
    }
    size_t key_end = eq;
    while (key_end > 0 && line[key_end - 1] == ' ') {
      --key_end;
    }
    size_t value_begin = eq + 1;
    if (value_begin < line.size() && line[value_begin] == ' ') {
      ++value_begin;
    }
    fields.emplace_back(std::string(line.substr(0, key_end)),
                        std::string(line.substr(value_begin)));
  }
  return fields;
}

std::string render_report(const CertificationReport& r, ReportMode mode, int text_digits) {
  if (mode == ReportMode::Structured) {
    return render_structured(structured_fields(r));
  }
  std::ostringstream out;
  out << "manifold " << r.name << "  (n=" << r.n << ", k=" << r.k << ", h=" << r.h
      << ", precision=" << r.precision_digits << ")\n";
  if (!r.selected_rows.empty()) {
    out << "selected rows   = " << row_list(r.selected_rows) << "\n";
  }
  if (r.residual) {
    out << "|b|             = " << r.residual->norm_b.to_decimal(text_digits) << "\n";
  }
  if (r.lipschitz_l) {
    out << "L               = " << r.lipschitz_l->to_decimal(text_digits) << "\n";
  }
  if (r.norm_sup) {
    out << "|J^-1|_sup      = " << r.norm_sup->to_decimal(text_digits) << "\n";
  }
  if (r.norm_len) {
    out << "|J^-1|_len      = " << r.norm_len->to_decimal(text_digits) << "\n";
  }
  if (r.threshold_sup) {
    out << "threshold_sup   = " << r.threshold_sup->to_decimal(text_digits) << "\n";
  }
  if (r.threshold_len) {
    out << "threshold_len   = " << r.threshold_len->to_decimal(text_digits) << "\n";
  }
  if (r.margin_sup) {
    out << "margin_sup      = " << r.margin_sup->to_decimal(text_digits) << "\n";
  }
  if (r.margin_len) {
    out << "margin_len      = " << r.margin_len->to_decimal(text_digits) << "\n";
  }
  if (r.det_a) {
    out << "det J           = " << complex_literal(*r.det_a, text_digits) << "\n";
  }
  if (r.newton) {
    out << "|hh|            = " << r.newton->norm_hh.to_decimal(text_digits) << "\n";
  }
  if (r.tests) {
    out << "tests           = " << test_value(r.tests->pass1, r.tests->fail1) << " "
        << test_value(r.tests->pass2, r.tests->fail2) << " "
        << test_value(r.tests->pass3, r.tests->fail3) << "\n";
  }
  out << "verdict         = " << to_string(r.verdict);
  if (r.verdict == Verdict::Inapplicable && !r.reason.empty()) {
    out << " (" << r.reason << ")";
  }
  out << "\n";
  return out.str();
}

}  // namespace hypcert
