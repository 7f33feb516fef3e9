#pragma once

#include <cmath>
#include <cstdint>

namespace meiga {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double norm(const Vec3& v) {
  return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

// One sensor frame as the firmware reads it off the bus.
struct RawSample {
  std::int64_t t_us = 0;                     // monotone timestamp
  std::int16_t ax = 0, ay = 0, az = 0;       // accelerometer counts
  std::int16_t gx = 0, gy = 0, gz = 0;       // gyroscope counts
  std::uint16_t ir = 0;                      // ADC counts, 0..4095
};

// Same frame in physical units.
struct PhysSample {
  std::int64_t t_us = 0;
  Vec3 accel;       // g
  Vec3 gyro;        // deg/s
  double ir = 0.0;  // normalized reflectance, [0, 1]
};

// Fused head attitude in degrees. yaw_deg accumulates without wrapping so
// consumers can take exact differences; use wrap_deg() for a bounded angle.
struct Attitude {
  double pitch_deg = 0.0;
  double roll_deg = 0.0;
  double yaw_deg = 0.0;
};

// Wrap an angle into [-180, 180).
inline double wrap_deg(double deg) {
  double w = std::fmod(deg + 180.0, 360.0);
  if (w < 0.0) w += 360.0;
  return w - 180.0;
}

inline constexpr int kAdcFullScale = 4095;

}  // namespace meiga
