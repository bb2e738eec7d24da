#pragma once

#include <string>
#include <vector>

namespace pbsim {

// Shortest representation carrying the requested number of significant
// digits ("%.*g"); NaN renders as "nan".
std::string format_double(double v, int precision = 12);

// RFC-4180 quoting: fields containing commas, quotes or newlines are wrapped
// in double quotes with embedded quotes doubled.
std::string csv_field(const std::string& raw);

// Header row plus one line per data row, fields formatted with
// format_double.
std::string render_csv(const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows,
                       int precision = 12);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Inverse of render_csv for fully numeric tables (NaN cells round-trip).
// Throws std::runtime_error on malformed input.
CsvTable parse_csv(const std::string& text);

// Writes via a temporary file in the same directory followed by an atomic
// rename, so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace pbsim
