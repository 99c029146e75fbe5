#include "riccati/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "riccati/errors.hpp"

namespace riccati::io {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<Column>& cols) {
  if (cols.empty()) return;
  const std::size_t n = cols.front().values.size();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].values.size() != n) throw DomainError("write_csv: ragged columns");
    os << (c ? "," : "") << cols[c].name;
  }
  os << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c)
      os << (c ? "," : "") << format_double(cols[c].values[i]);
    os << "\n";
  }
}

std::vector<Column> read_csv(std::istream& is) {
  std::vector<Column> cols;
  std::string line;
  if (!std::getline(is, line)) return cols;
  {
    std::stringstream header(line);
    std::string name;
    while (std::getline(header, name, ',')) cols.push_back({name, {}});
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(row, cell, ',')) {
      if (c >= cols.size()) throw DomainError("read_csv: extra cell");
      cols[c++].values.push_back(std::stod(cell));
    }
    if (c != cols.size()) throw DomainError("read_csv: short row");
  }
  return cols;
}

}  // namespace riccati::io
