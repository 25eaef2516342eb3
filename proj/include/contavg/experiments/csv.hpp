#pragma once

#include <string>
#include <vector>

namespace contavg::experiments {

// A plain table of text cells; numbers are formatted with %.17g so a written
// table reads back to the same doubles.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  int column(const std::string& name) const;  // -1 when absent
  double number(std::size_t row, const std::string& name) const;
};

std::string format_number(double v);

std::string to_csv(const Table& t);
std::string to_markdown(const Table& t);
Table parse_csv(const std::string& text);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace contavg::experiments
