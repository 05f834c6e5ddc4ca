#pragma once

#include "norts/series.hpp"

#include <filesystem>
#include <iosfwd>

namespace norts {

/// One numeric column, optional header line, '.' decimal separator. Blank lines are skipped.
/// Non-numeric cells raise InvalidInput with the 1-based line number.
Series read_series_csv(std::istream& in, int period = 1);
Series read_series_csv(const std::filesystem::path& path, int period = 1);

}  // namespace norts
