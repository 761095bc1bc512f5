// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcos {

/// printf "%.17g": enough digits to round-trip any double exactly.
std::string format_double(double x);

/// Writes `content` verbatim (binary mode, so LF stays LF). Errors carry the path.
void write_text_file(const std::filesystem::path& path, std::string_view content);

std::string read_text_file(const std::filesystem::path& path);

/// Parses a real vector from text. Values may be separated by commas and/or
/// newlines (inline "0.6,0.8" or one value per line); blank lines and
/// whitespace around values are ignored. Parse errors report
/// `origin:line:column`.
std::vector<double> parse_vector_text(std::string_view text, std::string_view origin);

/// Parses a row-per-line comma-separated matrix. All rows must have the same
/// number of columns.
std::vector<std::vector<double>> parse_matrix_text(std::string_view text, std::string_view origin);

/// Flat JSON object with keys emitted in sorted order. Values are stored
/// pre-serialized.
class JsonObject {
 public:
  JsonObject& number(const std::string& key, double value);
  JsonObject& integer(const std::string& key, long long value);
  JsonObject& string(const std::string& key, std::string_view value);
  JsonObject& null(const std::string& key);
  JsonObject& number_array(const std::string& key, std::span<const double> values);

  /// Compact single-line rendering terminated by a newline.
  std::string dump() const;

 private:
  std::map<std::string, std::string> fields_;
};

}  // namespace hcos
