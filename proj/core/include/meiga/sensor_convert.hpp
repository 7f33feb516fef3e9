#pragma once

#include <span>
#include <stdexcept>

#include "meiga/config.hpp"
#include "meiga/types.hpp"

namespace meiga {

// Startup self-configuration result: resting gyro bias and the resting
// cheek reflectance level the blink detector measures deviations from.
struct Calibration {
  Vec3 gyro_bias;            // deg/s
  double ir_baseline = 0.0;  // normalized
  double ir_sigma = 0.0;     // normalized, >= 0
  std::int64_t window_ms = 0;
};

struct NotStationaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw counts -> physical units. Total in each channel: every 16-bit input
// maps to a finite value.
PhysSample to_phys(const RawSample& raw, const PipelineConfig& cfg);

// Mean/std over a resting window. Throws NotStationaryError when the window
// has fewer than 10 samples or the mean |gyro| residual after bias removal
// exceeds 2 deg/s on any axis.
Calibration calibrate(std::span<const PhysSample> samples,
                      const PipelineConfig& cfg);

inline constexpr double kStationarityLimitDps = 2.0;
inline constexpr std::size_t kMinCalibSamples = 10;

}  // namespace meiga
