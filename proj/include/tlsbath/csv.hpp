#pragma once

#include <fstream>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tlsbath::io {

/// Round-trip representation (17 significant digits).
std::string format_double(double v);

/// Minimal CSV writer. Optional `# key=value` comment lines go before the header.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  void comment(std::string_view text);
  void header(std::initializer_list<std::string_view> cols);
  void header(const std::vector<std::string>& cols);
  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);

 private:
  std::ofstream out_;
  std::string path_;
};

/// Numeric CSV reader: skips '#' comments, reads a header and rows of doubles.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> comments;  // text after '#', leading blanks removed

  std::size_t column(std::string_view name) const;
  /// Value of a `key=value` comment, if present.
  std::optional<std::string> comment_value(std::string_view key) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace tlsbath::io
