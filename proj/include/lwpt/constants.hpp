#ifndef LWPT_CONSTANTS_HPP
#define LWPT_CONSTANTS_HPP

#include <numbers>

namespace lwpt {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299'792'458.0;  // [m/s]

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Wraps an angle in degrees to [0, 360).
double wrap_deg(double deg);

}  // namespace lwpt

#endif
