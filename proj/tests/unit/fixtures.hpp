#pragma once

// Generated by tests/oracles/make_fixtures.py.

#include <array>

namespace norts::test {

inline constexpr std::array<double, 20> kFixture20 = {
    1.077622, 0.464533, 1.799192, -2.079794, 2.068905,
    0.856609, 0.047899, 1.697075, -2.402948, 1.183174,
    0.037430, 2.319391, 2.384883, -0.355725, -0.366336,
    -1.440074, -0.075379, 2.138829, 3.214541, 1.957599};

inline constexpr std::array<double, 50> kFixture50 = {
    1.966964, 0.541162, -0.443594, 0.467071, -0.348456,
    0.522620, -1.044613, 0.411975, -1.140281, 0.033648,
    -0.203131, -0.562422, -0.015653, -0.580004, -0.945944,
    0.111123, 1.964544, -0.408394, 1.032649, 1.391352,
    -0.702675, -0.020568, 0.517869, -0.755495, 0.852569,
    1.133681, 2.038542, 1.001397, 1.246450, 2.186051,
    0.858806, -0.242581, -1.523689, -0.170652, -1.318412,
    0.702170, 0.357816, 0.918402, 0.438234, 1.369802,
    -0.045414, 0.036443, 1.411048, -0.834997, -0.057972,
    0.957866, -0.776174, -0.932571, -1.529682, 0.721851};

inline constexpr std::array<double, 12> kFixture12 = {
    1.248814, 0.351814, 0.380812, 1.740261, 0.330527,
    0.979482, 0.227971, 0.074488, 1.680839, 1.148470,
    2.114390, 0.229989};

inline constexpr std::array<double, 25> kFixture25 = {
    -0.021207, -3.745307, -0.323459, -0.362475, 1.705725,
    -2.668950, 3.349209, 0.058745, -0.476736, 0.296540,
    0.242447, -0.323443, 0.036660, -0.734521, 1.303913,
    -2.046499, 1.698190, -0.234038, 0.514698, -0.108489,
    0.515656, -4.125467, 0.577780, -0.741866, 0.261547};

inline constexpr std::array<double, 30> kFixture30 = {
    6.961146, 5.713705, 4.654574, 7.659156, 5.743081,
    6.601524, 7.361457, 5.658513, 3.216024, 6.860440,
    10.155448, 8.850244, 5.204534, 5.651770, 6.108937,
    4.105882, 4.133535, 3.214798, 5.846282, 4.107929,
    3.864928, 4.336815, 4.476979, 4.362037, 3.178531,
    5.361345, 7.456290, 6.434298, 4.922627, 5.755838};

}  // namespace norts::test
