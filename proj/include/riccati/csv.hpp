#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riccati::io {

/// Shortest-round-trip decimal rendering at 17 significant digits.
std::string format_double(double x);

struct Column {
  std::string name;
  std::vector<double> values;
};

/// Header row of names, then one row per index; floats at 17 significant
/// digits so parsing an emitted trace reproduces the values exactly.
void write_csv(std::ostream& os, const std::vector<Column>& cols);
std::vector<Column> read_csv(std::istream& is);

}  // namespace riccati::io
