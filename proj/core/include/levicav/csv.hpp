#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace levicav {

/// Deterministic CSV writer: "# key: value" comment block, then a header
/// row, then data rows formatted with %.12g. No timestamps, so identical
/// inputs produce byte-identical files.
class CsvWriter {
 public:
  void meta(const std::string& key, const std::string& value);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void row_mixed(const std::vector<std::string>& values);
  const std::string& str() const { return buf_; }
  void write_file(const std::string& path) const;

  static std::string format(double v);

 private:
  std::string buf_;
  size_t ncols_ = 0;
};

/// FNV-1a hash of a string, for config fingerprints in output headers.
uint64_t fnv1a(const std::string& data);

}  // namespace levicav
