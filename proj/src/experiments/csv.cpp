#include "contavg/experiments/csv.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "contavg/errors.hpp"

namespace contavg::experiments {

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw ContractViolation("table row has " + std::to_string(row.size()) + " cells, expected " +
                            std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

int Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return static_cast<int>(i);
  }
  return -1;
}

double Table::number(std::size_t row, const std::string& name) const {
  const int c = column(name);
  if (c < 0) throw ContractViolation("no column " + name);
  return std::stod(rows.at(row)[c]);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].find_first_of(",\"\n") != std::string::npos) {
        throw ContractViolation("csv cell needs quoting: " + cells[i]);
      }
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string to_markdown(const Table& t) {
  std::string out = "|";
  for (const auto& c : t.columns) out += " " + c + " |";
  out += "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += "---|";
  out += '\n';
  for (const auto& r : t.rows) {
    out += "|";
    for (const auto& c : r) out += " " + c + " |";
    out += '\n';
  }
  return out;
}

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto pos = line.find(',', start);
      cells.push_back(line.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    if (header) {
      t.columns = std::move(cells);
      header = false;
    } else if (cells.size() != t.columns.size()) {
      throw Error("csv line " + std::to_string(lineno) + ": expected " +
                  std::to_string(t.columns.size()) + " cells");
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  if (header) throw Error("csv input is empty");
  return t;
}

void write_text(const std::string& path, const std::string& text) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("write failed: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace contavg::experiments
