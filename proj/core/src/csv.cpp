#include "levicav/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace levicav {

std::string CsvWriter::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
  buf_ += "# " + key + ": " + value + "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  ncols_ = columns.size();
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += columns[i];
  }
  buf_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (ncols_ && values.size() != ncols_)
    throw std::invalid_argument("CsvWriter: row width mismatch");
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += format(values[i]);
  }
  buf_ += '\n';
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
  if (ncols_ && values.size() != ncols_)
    throw std::invalid_argument("CsvWriter: row width mismatch");
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += values[i];
  }
  buf_ += '\n';
}

void CsvWriter::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("CsvWriter: cannot open " + path);
  out << buf_;
}

uint64_t fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace levicav
