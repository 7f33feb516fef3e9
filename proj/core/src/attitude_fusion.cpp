#include "meiga/attitude_fusion.hpp"

#include <cmath>

namespace meiga {
namespace {

constexpr double kRadToDeg = 180.0 / 3.141592653589793238462643383279502884;

// Signed permutation from gyro body axes to attitude rates for the vertical
// mounting: x -> roll, y -> pitch, z -> yaw. Adjust here for other mounts.
struct AxisMap {
  int pitch = 1;
  int roll = 0;
  int yaw = 2;
  double pitch_sign = 1.0;
  double roll_sign = 1.0;
  double yaw_sign = 1.0;
};
constexpr AxisMap kAxisMap{};

double axis(const Vec3& v, int i) { return i == 0 ? v.x : (i == 1 ? v.y : v.z); }

// Keep in-range angles bit-identical; only fold genuinely out-of-range ones.
double fold_deg(double deg) {
  return (deg >= -180.0 && deg < 180.0) ? deg : wrap_deg(deg);
}

}  // namespace

std::optional<TiltAngles> accel_tilt(const Vec3& accel_g,
                                     const PipelineConfig& cfg) {
  const double mag = norm(accel_g);
  if (!(mag >= cfg.accel_gate_min && mag <= cfg.accel_gate_max))
    return std::nullopt;
  TiltAngles t;
  t.pitch_deg = std::atan2(-accel_g.x, std::sqrt(accel_g.y * accel_g.y +
                                                 accel_g.z * accel_g.z)) *
                kRadToDeg;
  t.roll_deg = std::atan2(accel_g.y, accel_g.z) * kRadToDeg;
  return t;
}

std::optional<AngleDeltas> gyro_delta(const Vec3& gyro_dps, double dt_s) {
  if (!(dt_s > 0.0) || dt_s > kMaxIntegrationDtS) return std::nullopt;
  AngleDeltas d;
  d.pitch_deg = kAxisMap.pitch_sign * axis(gyro_dps, kAxisMap.pitch) * dt_s;
  d.roll_deg = kAxisMap.roll_sign * axis(gyro_dps, kAxisMap.roll) * dt_s;
  d.yaw_deg = kAxisMap.yaw_sign * axis(gyro_dps, kAxisMap.yaw) * dt_s;
  return d;
}

FusionState fusion_init(std::optional<TiltAngles> tilt, std::int64_t t_us,
                        const PipelineConfig& cfg) {
  FusionState st;
  st.last_t_us = t_us;
  st.accel_valid = tilt.has_value();
  if (tilt) {
    st.attitude.pitch_deg = tilt->pitch_deg;
    st.attitude.roll_deg = tilt->roll_deg;
    if (cfg.kalman_tilt_enabled) {
      st.pitch_kalman =
          kalman_new(tilt->pitch_deg, cfg.kalman_p0, cfg.kalman_r, cfg.kalman_q);
      st.roll_kalman =
          kalman_new(tilt->roll_deg, cfg.kalman_p0, cfg.kalman_r, cfg.kalman_q);
      st.tilt_kalman_seeded = true;
    }
  }
  return st;
}

FusionState fuse(FusionState state, const PhysSample& sample,
                 const Calibration& calib, const PipelineConfig& cfg) {
  const Vec3 rate{sample.gyro.x - calib.gyro_bias.x,
                  sample.gyro.y - calib.gyro_bias.y,
                  sample.gyro.z - calib.gyro_bias.z};

  std::optional<TiltAngles> tilt = accel_tilt(sample.accel, cfg);
  state.accel_valid = tilt.has_value();

  // Optional measurement denoising of the tilt angles (the variances are
  // then read in squared degrees).
  if (cfg.kalman_tilt_enabled && tilt) {
    if (!state.tilt_kalman_seeded) {
      state.pitch_kalman =
          kalman_new(tilt->pitch_deg, cfg.kalman_p0, cfg.kalman_r, cfg.kalman_q);
      state.roll_kalman =
          kalman_new(tilt->roll_deg, cfg.kalman_p0, cfg.kalman_r, cfg.kalman_q);
      state.tilt_kalman_seeded = true;
    } else {
      auto up = kalman_update(state.pitch_kalman, tilt->pitch_deg);
      state.pitch_kalman = up.state;
      tilt->pitch_deg = up.value;
      auto ur = kalman_update(state.roll_kalman, tilt->roll_deg);
      state.roll_kalman = ur.state;
      tilt->roll_deg = ur.value;
    }
  }

  if (state.last_t_us < 0) {
    // First sample ever: anchor here instead of integrating from nothing.
    state.last_t_us = sample.t_us;
    state.gap = false;
    if (tilt) {
      state.attitude.pitch_deg = tilt->pitch_deg;
      state.attitude.roll_deg = tilt->roll_deg;
    }
    return state;
  }

  const double dt_s = (sample.t_us - state.last_t_us) * 1e-6;
  state.last_t_us = sample.t_us;

  const std::optional<AngleDeltas> d = gyro_delta(rate, dt_s);
  if (!d) {
    // Sample gap: re-anchor. Accel, when valid, is the only absolute
    // reference left for pitch/roll; yaw has none and holds.
    state.gap = true;
    if (tilt) {
      state.attitude.pitch_deg = tilt->pitch_deg;
      state.attitude.roll_deg = tilt->roll_deg;
    }
    return state;
  }
  state.gap = false;

  Attitude& att = state.attitude;
  if (tilt) {
    att.pitch_deg = cfg.A * (att.pitch_deg + d->pitch_deg) +
                    (1.0 - cfg.A) * tilt->pitch_deg;
    att.roll_deg =
        cfg.A * (att.roll_deg + d->roll_deg) + (1.0 - cfg.A) * tilt->roll_deg;
  } else {
    att.pitch_deg = att.pitch_deg + d->pitch_deg;
    att.roll_deg = att.roll_deg + d->roll_deg;
  }
  att.pitch_deg = fold_deg(att.pitch_deg);
  att.roll_deg = fold_deg(att.roll_deg);
  att.yaw_deg = att.yaw_deg + d->yaw_deg;

  return state;
}

}  // namespace meiga
