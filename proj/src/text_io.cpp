// SPDX-License-Identifier: Apache-2.0
#include "hcos/text_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "hcos/error.hpp"

namespace hcos {
namespace {

std::string location(std::string_view origin, std::size_t line, std::size_t column) {
  std::ostringstream out;
  out << origin << ':' << line << ':' << column;
  return out.str();
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits one line on commas and parses each field. Columns are 1-based.
std::vector<double> parse_line(std::string_view line, std::size_t line_no,
                               std::string_view origin, bool allow_empty_line) {
  std::vector<double> values;
  std::size_t start = 0;
  bool only_blank = true;
  for (char c : line) {
    if (!is_blank(c)) only_blank = false;
  }
  if (only_blank) {
    if (allow_empty_line) return values;
    throw Error(ErrorCode::parse, location(origin, line_no, 1) + ": empty row");
  }

  while (start <= line.size()) {
    std::size_t end = line.find(',', start);
    if (end == std::string_view::npos) end = line.size();
    std::size_t b = start;
    std::size_t e = end;
    while (b < e && is_blank(line[b])) ++b;
    while (e > b && is_blank(line[e - 1])) --e;
    if (b == e) {
      throw Error(ErrorCode::parse, location(origin, line_no, b + 1) + ": missing value");
    }
    const std::string field(line.substr(b, e - b));
    char* parse_end = nullptr;
    errno = 0;
    const double value = std::strtod(field.c_str(), &parse_end);
    if (parse_end != field.c_str() + field.size()) {
      throw Error(ErrorCode::parse,
                  location(origin, line_no, b + 1) + ": not a number: '" + field + "'");
    }
    if (errno == ERANGE || !std::isfinite(value)) {
      throw Error(ErrorCode::parse,
                  location(origin, line_no, b + 1) + ": value out of range: '" + field + "'");
    }
    values.push_back(value);
    if (end == line.size()) break;
    start = end + 1;
  }
  return values;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    fn(text.substr(pos, nl - pos), line_no);
    if (nl == text.size()) break;
    pos = nl + 1;
    ++line_no;
  }
}

std::string escape_json(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
  return out;
}

std::string json_number(double x) {
  // JSON has no NaN/Inf.
  if (!std::isfinite(x)) return "null";
  return format_double(x);
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::io, "cannot open '" + path.string() + "' for writing: " +
                                   std::strerror(errno));
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) {
    throw Error(ErrorCode::io, "failed writing '" + path.string() + "'");
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io, "cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_vector_text(std::string_view text, std::string_view origin) {
  std::vector<double> values;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto row = parse_line(line, line_no, origin, /*allow_empty_line=*/true);
    values.insert(values.end(), row.begin(), row.end());
  });
  if (values.empty()) {
    throw Error(ErrorCode::parse, std::string(origin) + ": no values");
  }
  return values;
}

std::vector<std::vector<double>> parse_matrix_text(std::string_view text,
                                                   std::string_view origin) {
  std::vector<std::vector<double>> rows;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto row = parse_line(line, line_no, origin, /*allow_empty_line=*/true);
    if (row.empty()) return;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::parse, location(origin, line_no, 1) + ": expected " +
                                        std::to_string(rows.front().size()) + " columns, got " +
                                        std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  });
  if (rows.empty()) {
    throw Error(ErrorCode::parse, std::string(origin) + ": no rows");
  }
  return rows;
}

JsonObject& JsonObject::number(const std::string& key, double value) {
  fields_[key] = json_number(value);
  return *this;
}

JsonObject& JsonObject::integer(const std::string& key, long long value) {
  fields_[key] = std::to_string(value);
  return *this;
}

JsonObject& JsonObject::string(const std::string& key, std::string_view value) {
  fields_[key] = escape_json(value);
  return *this;
}

JsonObject& JsonObject::null(const std::string& key) {
  fields_[key] = "null";
  return *this;
}

JsonObject& JsonObject::number_array(const std::string& key, std::span<const double> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += json_number(values[i]);
  }
  out += ']';
  fields_[key] = std::move(out);
  return *this;
}

std::string JsonObject::dump() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : fields_) {
    if (!first) out += ',';
    first = false;
    out += escape_json(key);
    out += ':';
    out += value;
  }
  out += "}\n";
  return out;
}

}  // namespace hcos
