#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace flavent {

/// Deterministic CSV emitter: one `# key=value ...` comment line, a header
/// row, then data rows. Floats use 9 significant digits, LF endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void meta(const std::string& key, const std::string& value) {
    meta_ += (meta_.empty() ? "# " : " ") + key + "=" + value;
  }
  void meta(const std::string& key, double value) { meta(key, format(value)); }
  void meta(const std::string& key, long long value) { meta(key, std::to_string(value)); }

  void header(const std::vector<std::string>& cols) {
    if (!meta_.empty()) os_ << meta_ << "\n";
    write_row(cols);
  }

  void row(const std::vector<std::string>& cells) { write_row(cells); }

  static std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
  }

 private:
  void write_row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
    os_ << "\n";
  }

  std::ostream& os_;
  std::string meta_;
};

}  // namespace flavent
