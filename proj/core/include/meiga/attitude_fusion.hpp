#pragma once

#include <optional>

#include "meiga/config.hpp"
#include "meiga/scalar_kalman.hpp"
#include "meiga/sensor_convert.hpp"
#include "meiga/types.hpp"

namespace meiga {

struct TiltAngles {
  double pitch_deg = 0.0;
  double roll_deg = 0.0;
};

// Gravity-referenced tilt:
//   pitch = atan2(-ax, sqrt(ay^2 + az^2)),  roll = atan2(ay, az)
// Empty when |a| falls outside [accel_gate_min, accel_gate_max]; the caller
// skips the accel correction for that sample.
std::optional<TiltAngles> accel_tilt(const Vec3& accel_g,
                                     const PipelineConfig& cfg);

struct AngleDeltas {
  double pitch_deg = 0.0;
  double roll_deg = 0.0;
  double yaw_deg = 0.0;
};

// Integration is meaningless past this gap; callers reset instead.
inline constexpr double kMaxIntegrationDtS = 0.5;

// Rectangular integration of bias-corrected body rates over dt seconds.
// Empty signals a sample gap (dt <= 0 or dt > kMaxIntegrationDtS).
std::optional<AngleDeltas> gyro_delta(const Vec3& gyro_dps, double dt_s);

struct FusionState {
  Attitude attitude;
  std::int64_t last_t_us = -1;  // -1: no sample consumed yet
  bool accel_valid = false;     // gate result for the last sample
  bool gap = false;             // last step hit a sample gap and reset
  // Optional tilt denoising (kalman_tilt_enabled); seeded on first valid tilt.
  bool tilt_kalman_seeded = false;
  KalmanState pitch_kalman;
  KalmanState roll_kalman;
};

// Seed pitch/roll from a measured tilt (yaw = 0) before streaming samples.
FusionState fusion_init(std::optional<TiltAngles> tilt, std::int64_t t_us,
                        const PipelineConfig& cfg);

// One fusion step. Pitch and roll follow the complementary update
//   theta = A (theta_prev + dtheta_gyro) + (1 - A) theta_accel
// falling back to pure integration while the accel gate rejects the sample.
// Yaw always integrates. On a sample gap the state re-anchors at the
// sample: pitch/roll snap to the accel tilt when available, yaw holds.
FusionState fuse(FusionState state, const PhysSample& sample,
                 const Calibration& calib, const PipelineConfig& cfg);

}  // namespace meiga
