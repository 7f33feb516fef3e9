#include "meiga/sensor_convert.hpp"

#include <cmath>
#include <string>

namespace meiga {

PhysSample to_phys(const RawSample& raw, const PipelineConfig& cfg) {
  PhysSample out;
  out.t_us = raw.t_us;
  out.accel = {raw.ax / cfg.accel_scale, raw.ay / cfg.accel_scale,
               raw.az / cfg.accel_scale};
  out.gyro = {raw.gx / cfg.gyro_scale, raw.gy / cfg.gyro_scale,
              raw.gz / cfg.gyro_scale};
  out.ir = raw.ir / static_cast<double>(kAdcFullScale);
  return out;
}

Calibration calibrate(std::span<const PhysSample> samples,
                      const PipelineConfig& cfg) {
  (void)cfg;
  if (samples.size() < kMinCalibSamples)
    throw NotStationaryError("calibration window too small: " +
                             std::to_string(samples.size()) + " samples");

  const double n = static_cast<double>(samples.size());
  Vec3 bias;
  double ir_sum = 0.0;
  for (const auto& s : samples) {
    bias.x += s.gyro.x;
    bias.y += s.gyro.y;
    bias.z += s.gyro.z;
    ir_sum += s.ir;
  }
  bias.x /= n;
  bias.y /= n;
  bias.z /= n;
  const double ir_mean = ir_sum / n;

  // Mean absolute gyro residual per axis after bias removal; a moving head
  // produces residuals far above the noise floor.
  Vec3 resid;
  double ir_var = 0.0;
  for (const auto& s : samples) {
    resid.x += std::abs(s.gyro.x - bias.x);
    resid.y += std::abs(s.gyro.y - bias.y);
    resid.z += std::abs(s.gyro.z - bias.z);
    const double d = s.ir - ir_mean;
    ir_var += d * d;
  }
  resid.x /= n;
  resid.y /= n;
  resid.z /= n;
  if (resid.x > kStationarityLimitDps || resid.y > kStationarityLimitDps ||
      resid.z > kStationarityLimitDps)
    throw NotStationaryError("gyro residual exceeds 2 deg/s during calibration");

  Calibration calib;
  calib.gyro_bias = bias;
  calib.ir_baseline = ir_mean;
  calib.ir_sigma = std::sqrt(ir_var / n);
  calib.window_ms = (samples.back().t_us - samples.front().t_us) / 1000;
  return calib;
}

}  // namespace meiga
