#include "pbsim/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace pbsim {

std::string format_double(double v, int precision) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows,
                       int precision) {
  std::string out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (j) out += ',';
    out += csv_field(columns[j]);
  }
  out += '\n';
  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw std::invalid_argument("render_csv: row width does not match header");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format_double(row[j], precision);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw std::runtime_error("parse_csv: unterminated quoted field");
  fields.push_back(cur);
  return fields;
}

}  // namespace

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    pos = end + 1;
    if (line.empty()) continue;
    const auto fields = split_line(line);
    if (header) {
      table.columns = fields;
      header = false;
      continue;
    }
    if (fields.size() != table.columns.size())
      throw std::runtime_error("parse_csv: row width does not match header");
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      errno = 0;
      char* tail = nullptr;
      const double v = std::strtod(f.c_str(), &tail);
      if (tail == f.c_str() || *tail != '\0')
        throw std::runtime_error("parse_csv: non-numeric cell '" + f + "'");
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (header) throw std::runtime_error("parse_csv: missing header row");
  return table;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_file_atomic: cannot open " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write_file_atomic: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("write_file_atomic: rename to " + path + " failed: " +
                             std::strerror(errno));
  }
}

}  // namespace pbsim
