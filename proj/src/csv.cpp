#include "norts/csv.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <vector>

namespace norts {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\"");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\"");
  return s.substr(first, last - first + 1);
}

bool parse_real(const std::string& cell, double& out) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Series read_series_csv(std::istream& in, int period) {
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string cell = trim(line);
    if (cell.empty()) continue;
    if (cell.find(',') != std::string::npos || cell.find(';') != std::string::npos) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected a single column, got '" + cell + "'");
    }
    double v = 0.0;
    if (!parse_real(cell, v)) {
      if (!seen_data && line_no == 1) continue;  // header
      throw InvalidInput("line " + std::to_string(line_no) + ": non-numeric value '" + cell + "'");
    }
    seen_data = true;
    values.push_back(v);
  }
  return Series(Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())), period);
}

Series read_series_csv(const std::filesystem::path& path, int period) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return read_series_csv(in, period);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

}  // namespace norts
