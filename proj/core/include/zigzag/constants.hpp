#pragma once

#include <numbers>

namespace zigzag::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double speed_of_light = 299'792'458.0;  // m/s
inline constexpr double hbar = 1.054'571'817e-34;         // J s
inline constexpr double boltzmann = 1.380'649e-23;        // J/K

inline constexpr double deg = pi / 180.0;
inline constexpr double mdeg = 1e-3 * deg;

}  // namespace zigzag::constants
