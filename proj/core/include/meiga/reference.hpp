#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "meiga/blink_gesture.hpp"
#include "meiga/config.hpp"

namespace meiga {
namespace reference {

// Independent reference implementations used to cross-check the streaming
// pipeline (exercised by tests and the `selftest` CLI command). These stay
// deliberately separate from the production code paths.

// Offline blink segmentation: scan the denoised IR series for threshold
// crossings with hysteresis and debounce, collect the closure segments,
// then classify each by duration with latch/double-blink bookkeeping.
// On identical input this must reproduce BlinkFsm's event stream exactly.
std::vector<GestureEvent> segment_blinks(std::span<const std::int64_t> t_us,
                                         std::span<const double> ir_filtered,
                                         double ir_baseline,
                                         const PipelineConfig& cfg);

// Steady-state Kalman gain from the algebraic fixed point of the
// gain/covariance recursion: P* is the positive root of P^2 - qP - qr = 0,
// K* = P* / (P* + r).
double kalman_steady_state_gain(double r, double q);

}  // namespace reference
}  // namespace meiga
