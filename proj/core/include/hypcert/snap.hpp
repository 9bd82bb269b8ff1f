#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hypcert/manifold.hpp"

namespace hypcert {

enum class SnapFormat { Auto, Canonical, Transcript };

// Bracketed shape list in solver syntax: complex literals joined by commas,
// values may wrap across lines, an optional trailing tilde after the
// closing bracket is ignored. Offsets in ParseError refer to `text`.
std::vector<ShapeDecimal> parse_shapes(std::string_view text);

// Bracketed integer matrix: rows separated by semicolons, entries by
// commas. Rows must all have the same width.
IntMatrix parse_filling(std::string_view text);

// Reads either the structured key=value manifold format or a solver
// transcript with `pr sh` / `pr fill` sections plus an `h=` line. Auto
// sniffs between the two; an unrecognizable file raises UnknownFormat.
ManifoldProblem read_manifold_text(std::string_view text, SnapFormat format,
                                   const std::string& fallback_name);
ManifoldProblem read_manifold_file(const std::filesystem::path& path,
                                   SnapFormat format = SnapFormat::Auto);

// Structured form that read_manifold_text accepts back; shape literals are
// reproduced verbatim when the problem was parsed from text.
std::string serialize_manifold(const ManifoldProblem& p);

}  // namespace hypcert
