#pragma once

#include <string>
#include <vector>

namespace chiraltp {

// Fixed 12-significant-digit formatting; byte-stable across runs.
std::string format_number(double value);

// Buffers rows and writes the file atomically on commit (temp file +
// rename), so a failing command leaves no partial output. An empty path
// writes to stdout instead.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(const std::vector<std::string>& cells);
  void commit(const std::string& path) const;

  const std::string& text() const { return buffer_; }

 private:
  std::size_t columns_;
  std::string buffer_;
};

}  // namespace chiraltp
