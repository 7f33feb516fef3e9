#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace meiga {

// Runtime tuning for the whole signal chain. Plain value type; validated
// once with validate_config() and treated as immutable afterwards.
//
// The complementary-filter weight A covers the gyro path; the accel weight
// is always 1 - A and is never stored.
struct PipelineConfig {
  double A = 0.95;  // complementary filter weight, (0, 1]

  // IR-channel Kalman parameters (normalized reflectance units)
  double kalman_r = 0.0004;
  double kalman_q = 0.0001;
  double kalman_p0 = 1.0;
  bool kalman_tilt_enabled = false;  // also denoise accel tilt angles

  // blink protocol timing
  std::int64_t t_right_ms = 1000;  // closure at/above this -> right click
  std::int64_t t_hold_ms = 2000;   // closure at/above this -> drag latch
  std::int64_t debounce_ms = 30;
  double blink_delta = 0.08;  // relative IR deviation that counts as closure
  std::int64_t double_blink_gap_ms = 400;
  bool middle_click_enabled = false;

  // cursor mapping
  double gain_x = 15.0;  // px per degree of yaw
  double gain_y = 15.0;  // px per degree of pitch
  bool invert_x = false;
  bool invert_y = false;
  double rate_deadzone_dps = 0.5;
  double roll_deadzone_deg = 10.0;
  double scroll_rate = 0.5;  // wheel ticks/s per degree beyond deadzone

  // sensor scales and gates
  double accel_scale = 16384.0;  // counts per g
  double gyro_scale = 131.0;     // counts per deg/s
  std::int64_t calib_ms = 2000;
  double accel_gate_min = 0.5;  // accept |a| within [min, max] g
  double accel_gate_max = 1.5;

  double report_hz = 100.0;
};

// Returns one message per violated invariant; empty means valid.
std::vector<std::string> validate_config(const PipelineConfig& cfg);

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& msg, int line_no)
      : std::runtime_error(msg), line(line_no) {}
  int line;  // 1-based line in the config file, 0 if not tied to a line
};

// Flat `key = value` text format, keys named exactly like the struct
// fields. Unknown keys and re-validated invariant violations are errors.
PipelineConfig parse_config(std::istream& in);
PipelineConfig load_config(const std::string& path);  // throws ConfigError
void write_config(const PipelineConfig& cfg, std::ostream& out);
void save_config(const PipelineConfig& cfg, const std::string& path);

}  // namespace meiga
