#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "meiga/blink_gesture.hpp"
#include "meiga/config.hpp"
#include "meiga/types.hpp"

namespace meiga {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MotionAxis { Pitch, Roll, Yaw };

// Piecewise attitude primitive on one axis, active over [t0_s, t1_s]:
//   Hold  — constant offset of amp_deg
//   Ramp  — linear 0 -> amp_deg across the interval, held afterwards
//   Sine  — amp_deg * sin(2*pi*freq_hz*(t - t0))
struct MotionPrimitive {
  enum class Kind { Hold, Ramp, Sine };
  Kind kind = Kind::Hold;
  MotionAxis axis = MotionAxis::Yaw;
  double t0_s = 0.0;
  double t1_s = 0.0;
  double amp_deg = 0.0;
  double freq_hz = 1.0;  // Sine only
};

struct BlinkPulse {
  double t0_s = 0.0;
  double dur_s = 0.0;
};

struct NoiseSpec {
  double accel_g = 0.0;
  double gyro_dps = 0.0;
  double ir = 0.0;  // absolute sigma on normalized reflectance
};

// A deterministic synthetic capture with ground truth: motion profiles,
// cheek pulses, seeded Gaussian noise, and the gesture events the blink
// protocol must produce for it.
struct LabeledScenario {
  double duration_s = 10.0;
  double rate_hz = 100.0;
  double ir_baseline = 0.6;
  std::uint64_t seed = 0;
  NoiseSpec noise;
  std::vector<MotionPrimitive> motion;
  std::vector<BlinkPulse> blinks;
};

struct GeneratedScenario {
  std::vector<PhysSample> trace;
  std::vector<GestureEvent> expected;  // classification events only
};

// Renders the scenario at rate_hz. Gyro rates are emitted as per-sample
// finite differences of the attitude profile, so rectangular integration
// reconstructs the profile exactly; accel is the gravity direction for the
// current pitch/roll; IR pulses rise 2 x blink_delta (plus noise headroom)
// above baseline. Pulses must not overlap, must fit inside the trace, and
// must start after the calibration window settles.
GeneratedScenario gen_scenario(const LabeledScenario& scenario,
                               const PipelineConfig& cfg);

// Scenario file format: same `key = value` style as the config, with
// repeatable `motion = <hold|ramp|sine> axis=<pitch|roll|yaw> ...` and
// `blink = t0=<s> dur=<s>` entries.
LabeledScenario parse_scenario(std::istream& in);
LabeledScenario load_scenario(const std::string& path);

}  // namespace meiga
