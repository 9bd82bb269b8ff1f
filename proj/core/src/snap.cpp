#include "hypcert/snap.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "hypcert/errors.hpp"

namespace hypcert {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

bool is_word(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

size_t skip_space(std::string_view s, size_t i) {
  while (i < s.size() && is_space(s[i])) {
    ++i;
  }
  return i;
}

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Contents of `s` with whitespace removed, plus a map from cleaned index to
// original index so errors can point into the source text.
void clean_token(std::string_view s, size_t base, std::string* cleaned,
                 std::vector<size_t>* map) {
  cleaned->clear();
  map->clear();
  for (size_t i = 0; i < s.size(); ++i) {
    if (!is_space(s[i])) {
      cleaned->push_back(s[i]);
      map->push_back(base + i);
    }
  }
  map->push_back(base + s.size());
}

// Signed decimal with optional fraction and optional E exponent. Returns
// the consumed substring; `i` advances past it.
std::string scan_number(const std::string& s, size_t& i, const std::vector<size_t>& map) {
  const size_t start = i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    ++i;
  }
  size_t digits = 0;
  while (i < s.size() && is_digit(s[i])) {
    ++i;
    ++digits;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) {
      ++i;
      ++digits;
    }
  }
  if (digits == 0) {
    throw ParseError("expected a decimal number", map[i < map.size() ? i : map.size() - 1]);
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      ++i;
    }
    size_t exp_digits = 0;
    while (i < s.size() && is_digit(s[i])) {
      ++i;
      ++exp_digits;
    }
    if (exp_digits == 0) {
      throw ParseError("exponent marker without digits", map[i < map.size() ? i : map.size() - 1]);
    }
  }
  return s.substr(start, i - start);
}

ShapeDecimal parse_complex_token(std::string_view raw, size_t base) {
  std::string s;
  std::vector<size_t> map;
  clean_token(raw, base, &s, &map);
  if (s.empty()) {
    throw ParseError("empty shape literal", base);
  }
  size_t i = 0;
  std::string first = scan_number(s, i, map);
  ShapeDecimal shape;
  if (i == s.size()) {
    shape.re = first;
    return shape;
  }
  if (s[i] == '*') {
    if (i + 2 != s.size() || s[i + 1] != 'I') {
      throw ParseError("malformed imaginary unit", map[i]);
    }
    shape.im = first.front() == '+' ? first.substr(1) : first;
    return shape;
  }
  if (s[i] != '+' && s[i] != '-') {
    throw ParseError("unexpected character in shape literal", map[i]);
  }
  std::string second = scan_number(s, i, map);
  if (i + 2 != s.size() || s[i] != '*' || s[i + 1] != 'I') {
    throw ParseError("imaginary part must end in *I", map[i < map.size() ? i : map.size() - 1]);
  }
  shape.re = first;
  shape.im = second.front() == '+' ? second.substr(1) : second;
  return shape;
}

// The bracket block [start, end) including both brackets; `tail_end` also
// covers an optional trailing tilde.
struct BracketBlock {
  size_t open = 0;
  size_t close = 0;  // index of ']'
  size_t tail_end = 0;
};

BracketBlock find_block(std::string_view text, size_t from) {
  size_t open = text.find('[', from);
  if (open == std::string_view::npos) {
    throw ParseError("expected a bracketed block", from);
  }
  size_t close = text.find(']', open + 1);
  if (close == std::string_view::npos) {
    throw ParseError("unterminated bracketed block", open);
  }
  BracketBlock b;
  b.open = open;
  b.close = close;
  b.tail_end = close + 1;
  size_t t = skip_space(text, close + 1);
  if (t < text.size() && text[t] == '~') {
    b.tail_end = t + 1;
  }
  return b;
}

long parse_long(std::string_view value, size_t offset) {
  std::string v = trim(value);
  if (v.empty()) {
    throw ParseError("expected an integer", offset);
  }
  size_t i = (v[0] == '+' || v[0] == '-') ? 1 : 0;
  if (i == v.size()) {
    throw ParseError("expected an integer", offset);
  }
  for (; i < v.size(); ++i) {
    if (!is_digit(v[i])) {
      throw ParseError("expected an integer", offset + i);
    }
  }
  return std::stol(v);
}

}  // namespace

std::vector<ShapeDecimal> parse_shapes(std::string_view text) {
  size_t i = skip_space(text, 0);
  if (i >= text.size() || text[i] != '[') {
    throw ParseError("shape list must start with '['", i);
  }
  size_t close = text.find(']', i + 1);
  if (close == std::string_view::npos) {
    throw ParseError("unterminated shape list", i);
  }
  std::vector<ShapeDecimal> shapes;
  size_t cursor = i + 1;
  std::string_view body = text.substr(cursor, close - cursor);
  if (!trim(body).empty()) {
    size_t start = 0;
    while (true) {
      size_t comma = body.find(',', start);
      size_t end = comma == std::string_view::npos ? body.size() : comma;
      shapes.push_back(parse_complex_token(body.substr(start, end - start), cursor + start));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
  }
  size_t t = skip_space(text, close + 1);
  if (t < text.size() && text[t] == '~') {
    t = skip_space(text, t + 1);
  }
  if (t < text.size()) {
    throw ParseError("trailing characters after shape list", t);
  }
  return shapes;
}

IntMatrix parse_filling(std::string_view text) {
  size_t i = skip_space(text, 0);
  if (i >= text.size() || text[i] != '[') {
    throw ParseError("filling matrix must start with '['", i);
  }
  size_t close = text.find(']', i + 1);
  if (close == std::string_view::npos) {
    throw ParseError("unterminated filling matrix", i);
  }
  size_t t = skip_space(text, close + 1);
  if (t < text.size()) {
    throw ParseError("trailing characters after filling matrix", t);
  }

  std::vector<std::vector<mpz_class>> rows;
  size_t row_start = i + 1;
  std::string_view body = text.substr(0, close);
  while (row_start <= close) {
    size_t semi = body.find(';', row_start);
    size_t row_end = semi == std::string_view::npos ? close : semi;
    std::vector<mpz_class> row;
    size_t entry_start = row_start;
    while (entry_start <= row_end) {
      size_t comma = body.find(',', entry_start);
      size_t entry_end = (comma == std::string_view::npos || comma > row_end) ? row_end : comma;
      std::string cleaned;
      std::vector<size_t> map;
      clean_token(text.substr(entry_start, entry_end - entry_start), entry_start,
                  &cleaned, &map);
      if (cleaned.empty()) {
        throw ParseError("empty matrix entry", entry_start);
      }
      size_t p = (cleaned[0] == '+' || cleaned[0] == '-') ? 1 : 0;
      if (p == cleaned.size()) {
        throw ParseError("expected an integer entry", map[0]);
      }
      for (size_t q = p; q < cleaned.size(); ++q) {
        if (!is_digit(cleaned[q])) {
          throw ParseError("matrix entries must be integers", map[q]);
        }
      }
      row.emplace_back(cleaned);
      if (entry_end == row_end) {
        break;
      }
      entry_start = entry_end + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("ragged rows in filling matrix", row_start);
    }
    rows.push_back(std::move(row));
    if (semi == std::string_view::npos || semi > close) {
      break;
    }
    row_start = semi + 1;
  }
  return IntMatrix::from_rows(rows);
}

namespace {

ManifoldProblem read_canonical(std::string_view text, const std::string& fallback_name) {
  std::string name;
  std::optional<long> n_declared;
  std::optional<long> k_declared;
  long h_value = -1;
  bool have_h = false;
  std::vector<ShapeDecimal> shapes;
  bool have_shapes = false;
  IntMatrix fg;
  bool have_fg = false;

  size_t pos = 0;
  while (pos < text.size()) {
    pos = skip_space(text, pos);
    if (pos >= text.size()) {
      break;
    }
    if (text[pos] == '#') {
      size_t nl = text.find('\n', pos);
      pos = nl == std::string_view::npos ? text.size() : nl + 1;
      continue;
    }
    size_t key_start = pos;
    while (pos < text.size() && is_word(text[pos])) {
      ++pos;
    }
    std::string key(text.substr(key_start, pos - key_start));
    pos = skip_space(text, pos);
    if (key.empty() || pos >= text.size() || text[pos] != '=') {
      throw ParseError("expected key=value", key_start);
    }
    ++pos;
    if (key == "shapes" || key == "fg") {
      BracketBlock block = find_block(text, pos);
      std::string_view value = text.substr(block.open, block.tail_end - block.open);
      try {
        if (key == "shapes") {
          shapes = parse_shapes(value);
          have_shapes = true;
        } else {
          fg = parse_filling(value);
          have_fg = true;
        }
      } catch (const ParseError& e) {
        throw ParseError(e.message(), block.open + e.offset());
      }
      pos = block.tail_end;
      continue;
    }
    size_t nl = text.find('\n', pos);
    size_t value_end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view value = text.substr(pos, value_end - pos);
    if (key == "name") {
      name = trim(value);
    } else if (key == "n") {
      n_declared = parse_long(value, pos);
    } else if (key == "k") {
      k_declared = parse_long(value, pos);
    } else if (key == "h") {
      h_value = parse_long(value, pos);
      have_h = true;
    } else {
      throw ParseError("unknown key '" + key + "'", key_start);
    }
    pos = value_end;
  }

  if (!have_shapes || !have_fg || !have_h) {
    throw ParseError("missing required key (need shapes=, fg=, h=)", text.size());
  }
  ManifoldProblem p = assemble(name.empty() ? fallback_name : name, std::move(shapes),
                               std::move(fg), static_cast<int>(h_value));
  if (n_declared && *n_declared != p.n) {
    throw DimensionMismatch("declared n=" + std::to_string(*n_declared) +
                            " but filling matrix gives n=" + std::to_string(p.n));
  }
  if (k_declared && *k_declared != p.k) {
    throw DimensionMismatch("declared k=" + std::to_string(*k_declared) +
                            " but filling matrix gives k=" + std::to_string(p.k));
  }
  return p;
}

// First occurrence of `phrase` delimited by non-word characters.
size_t find_phrase(std::string_view text, std::string_view phrase) {
  size_t from = 0;
  while (true) {
    size_t at = text.find(phrase, from);
    if (at == std::string_view::npos) {
      return at;
    }
    bool left_ok = at == 0 || !is_word(text[at - 1]);
    size_t end = at + phrase.size();
    bool right_ok = end >= text.size() || !is_word(text[end]);
    if (left_ok && right_ok) {
      return at;
    }
    from = at + 1;
  }
}

ManifoldProblem read_transcript(std::string_view text, const std::string& fallback_name) {
  size_t sh_at = find_phrase(text, "pr sh");
  if (sh_at == std::string_view::npos) {
    throw ParseError("transcript lacks a 'pr sh' section", 0);
  }
  size_t fill_at = find_phrase(text, "pr fill");
  if (fill_at == std::string_view::npos) {
    throw ParseError("transcript lacks a 'pr fill' section", 0);
  }

  BracketBlock sh_block = find_block(text, sh_at + 5);
  BracketBlock fill_block = find_block(text, fill_at + 7);

  std::vector<ShapeDecimal> shapes;
  IntMatrix fg;
  try {
    shapes = parse_shapes(text.substr(sh_block.open, sh_block.tail_end - sh_block.open));
  } catch (const ParseError& e) {
    throw ParseError(e.message(), sh_block.open + e.offset());
  }
  try {
    fg = parse_filling(text.substr(fill_block.open, fill_block.close + 1 - fill_block.open));
  } catch (const ParseError& e) {
    throw ParseError(e.message(), fill_block.open + e.offset());
  }

  // Transcripts do not state the unsurgered cusp count, so this reader
  // requires an `h=` line; `name=` is honored the same way.
  long h_value = -1;
  bool have_h = false;
  std::string name;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string line = trim(text.substr(pos, end - pos));
    if (line.rfind("h", 0) == 0) {
      size_t eq = line.find('=');
      if (eq != std::string::npos && trim(line.substr(0, eq)) == "h") {
        h_value = parse_long(line.substr(eq + 1), pos);
        have_h = true;
      }
    } else if (line.rfind("name", 0) == 0) {
      size_t eq = line.find('=');
      if (eq != std::string::npos && trim(line.substr(0, eq)) == "name") {
        name = trim(line.substr(eq + 1));
      }
    }
    if (nl == std::string_view::npos) {
      break;
    }
    pos = nl + 1;
  }
  if (!have_h) {
    throw ParseError("transcript needs an 'h=<count>' line", text.size());
  }
  return assemble(name.empty() ? fallback_name : name, std::move(shapes), std::move(fg),
                  static_cast<int>(h_value));
}

}  // namespace

ManifoldProblem read_manifold_text(std::string_view text, SnapFormat format,
                                   const std::string& fallback_name) {
  if (format == SnapFormat::Auto) {
    if (find_phrase(text, "pr sh") != std::string_view::npos &&
        find_phrase(text, "pr fill") != std::string_view::npos) {
      format = SnapFormat::Transcript;
    } else if (text.find("shapes") != std::string_view::npos &&
               text.find("fg") != std::string_view::npos) {
      format = SnapFormat::Canonical;
    } else {
      throw UnknownFormat("input is neither the structured format nor a transcript");
    }
  }
  if (format == SnapFormat::Transcript) {
    return read_transcript(text, fallback_name);
  }
  return read_canonical(text, fallback_name);
}

ManifoldProblem read_manifold_file(const std::filesystem::path& path, SnapFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_manifold_text(buffer.str(), format, path.stem().string());
}

std::string serialize_manifold(const ManifoldProblem& p) {
  std::ostringstream out;
  out << "name=" << p.name << "\n";
  out << "n=" << p.n << "\n";
  out << "k=" << p.k << "\n";
  out << "h=" << p.h << "\n";
  out << "shapes=[";
  for (int j = 0; j < p.n; ++j) {
    if (j > 0) {
      out << ", ";
    }
    if (!p.shapes.empty()) {
      out << p.shapes[static_cast<size_t>(j)].literal();
    } else {
      const HPComplex& z = p.shape_values[static_cast<size_t>(j)];
      int digits = z.precision().digits() + 12;
      ShapeDecimal s;
      s.re = z.re.to_decimal(digits);
      s.im = z.im.to_decimal(digits);
      out << s.literal();
    }
  }
  out << "]\n";
  out << "fg=[";
  for (int i = 0; i < p.fg.rows(); ++i) {
    if (i > 0) {
      out << ";\n    ";
    }
    for (int j = 0; j < p.fg.cols(); ++j) {
      if (j > 0) {
        out << ", ";
      }
      out << p.fg.at(i, j).get_str();
    }
  }
  out << "]\n";
  return out.str();
}

}  // namespace hypcert
