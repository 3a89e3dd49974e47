#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fdroof {

// Locale-independent fixed formatting used by every CSV/SVG/text artifact:
// four decimals, switching to scientific notation for magnitudes below 1e-3
// or at/above 1e15.
std::string format_number(double value);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view field);

// Fixed-width text table. Columns are right-aligned except the first.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row);
  void render(std::ostream& out) const;
  // Comma-separated form of the same table, header first.
  void render_csv(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace fdroof
