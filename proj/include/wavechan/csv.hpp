#pragma once

#include <string>
#include <vector>

namespace wavechan {

// Atomic file write: content goes to a temp file in the same directory and
// is renamed over the target, so interrupted runs leave no partial output.
void atomic_write(const std::string& path, const std::string& content);

// CSV with a header row, comma separators, '.' decimals, 17 significant
// digits. Cells may be left empty.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& cells);
  std::string str() const;
  void write(const std::string& path) const;
  static std::string fmt(double v);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace wavechan
