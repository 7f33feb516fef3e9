#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "meiga/config.hpp"

namespace meiga {

enum class GestureKind {
  BlinkStart,
  BlinkEnd,
  LeftClick,
  RightClick,
  MiddleClick,
  DragLatch,
  DragRelease,
};

const char* to_string(GestureKind kind);
std::optional<GestureKind> gesture_kind_from_string(std::string_view name);

// True for the kinds that classify a completed blink (everything except
// BlinkStart/BlinkEnd).
bool is_classification(GestureKind kind);

struct GestureEvent {
  GestureKind kind;
  std::int64_t t_us = 0;
  std::int64_t duration_ms = 0;  // closure duration for classified kinds

  friend bool operator==(const GestureEvent&, const GestureEvent&) = default;
};

// Duration-classified blink detector over the denoised IR channel.
//
// A closure opens when the relative deviation |ir - baseline| / baseline
// exceeds blink_delta and stays above it for debounce_ms, and closes when
// the deviation falls under 0.6 * blink_delta (hysteresis). The closure
// duration D (first crossing to release) selects the action:
//
//   D <  t_right_ms            left click (or double-blink middle path)
//   t_right_ms <= D < t_hold   right click
//   D >= t_hold_ms             drag latch: left button held until the next
//                              short blink releases it
//
// Comparisons run on integer microseconds, so the partition boundaries are
// exact. The baseline drifts toward the current level with a 30 s time
// constant, but only while idle and unlatched.
class BlinkFsm {
 public:
  explicit BlinkFsm(double ir_baseline);

  // Feed one denoised sample (t_us strictly increasing); appends any events
  // produced at this sample. Out-of-range ir is clamped and counted.
  void step(std::int64_t t_us, double ir_filtered, const PipelineConfig& cfg,
            std::vector<GestureEvent>& out);

  // Input ended: emit a still-pending deferred left click.
  void finish(std::vector<GestureEvent>& out);

  // Sample gap: abort any in-flight closure and re-anchor time. Baseline
  // and the drag latch survive; a deferred left click whose window already
  // closed is emitted.
  void reset_timing(std::int64_t t_us, std::vector<GestureEvent>& out);

  bool drag_latched() const { return latched_; }
  double baseline() const { return baseline_; }
  std::uint64_t clamped_samples() const { return clamped_; }

 private:
  enum class State { Idle, Candidate, Active, AwaitSecondBlink };

  void classify_release(std::int64_t t_us, std::int64_t duration_us,
                        const PipelineConfig& cfg,
                        std::vector<GestureEvent>& out);

  State state_ = State::Idle;
  bool latched_ = false;
  bool second_of_pair_ = false;
  double baseline_;
  std::int64_t last_t_us_ = -1;
  std::int64_t cross_t_us_ = 0;       // first over-threshold sample
  std::int64_t pending_t_us_ = 0;     // release of the first short blink
  std::int64_t pending_duration_us_ = 0;
  std::uint64_t clamped_ = 0;
};

inline constexpr double kBaselineTauS = 30.0;
inline constexpr double kReleaseFraction = 0.6;  // hysteresis
inline constexpr double kMinBaselineDenom = 0.01;

}  // namespace meiga
