#pragma once

#include <array>

namespace norts::critical_values {

inline constexpr int kTablesVersion = 1;

// Dickey-Fuller t-statistic, regression with constant and linear trend.
// Rows: sample size; columns: lower-tail probability.
inline constexpr std::array<double, 6> kAdfSampleSizes = {25, 50, 100, 250, 500, 100000};
inline constexpr std::array<double, 8> kAdfProbabilities = {0.01, 0.025, 0.05, 0.10, 0.90, 0.95, 0.975, 0.99};
inline constexpr std::array<std::array<double, 8>, 6> kAdfTrend = {{
    {-4.38, -3.95, -3.60, -3.24, -1.14, -0.80, -0.50, -0.15},
    {-4.15, -3.80, -3.50, -3.18, -1.19, -0.87, -0.58, -0.24},
    {-4.04, -3.73, -3.45, -3.15, -1.22, -0.90, -0.62, -0.28},
    {-3.99, -3.69, -3.43, -3.13, -1.23, -0.92, -0.64, -0.31},
    {-3.98, -3.68, -3.42, -3.13, -1.24, -0.93, -0.65, -0.32},
    {-3.96, -3.66, -3.41, -3.12, -1.25, -0.94, -0.66, -0.33},
}};

// KPSS level-stationarity statistic, asymptotic upper-tail critical values.
inline constexpr std::array<double, 4> kKpssLevel = {0.347, 0.463, 0.574, 0.739};
inline constexpr std::array<double, 4> kKpssProbabilities = {0.10, 0.05, 0.025, 0.01};

}  // namespace norts::critical_values
