#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypcert/certify.hpp"

namespace hypcert {

enum class ReportMode { Text, Structured };

// Ordered key=value pairs; the structured report is exactly these lines.
using ReportFields = std::vector<std::pair<std::string, std::string>>;

// The structured field set for a report, in fixed order, with every scalar
// rendered at full working precision. Fields whose stage never ran are
// omitted.
ReportFields structured_fields(const CertificationReport& r);

std::string render_structured(const ReportFields& fields);

// Splits "key = value" lines back into fields; inverse of render_structured.
ReportFields parse_structured(std::string_view text);

// Human-readable (text) or machine-readable (structured) rendering. Text
// mode prints scalars with `text_digits` significant digits.
std::string render_report(const CertificationReport& r, ReportMode mode,
                          int text_digits = 40);

}  // namespace hypcert
