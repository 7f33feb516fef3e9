#pragma once

#include <span>
#include <vector>

#include "meiga/attitude_fusion.hpp"
#include "meiga/blink_gesture.hpp"
#include "meiga/config.hpp"
#include "meiga/cursor_map.hpp"
#include "meiga/hid_report.hpp"
#include "meiga/scalar_kalman.hpp"
#include "meiga/sensor_convert.hpp"
#include "meiga/types.hpp"

namespace meiga {

struct EmittedReport {
  std::int64_t t_us = 0;
  HidReport report;

  friend bool operator==(const EmittedReport&, const EmittedReport&) = default;
};

// Whole-chain state: convert -> fuse -> denoise -> gesture -> map -> encode.
// Single-owner; every sub-state advances on the same sample clock.
struct PipelineState {
  Calibration calib;
  FusionState fusion;
  KalmanState ir_kalman;
  BlinkFsm fsm;
  CursorState cursor;
  std::uint8_t held_buttons = 0;
  std::int64_t report_period_us = 0;
  std::int64_t next_report_at_us = 0;
  std::int64_t last_report_t_us = 0;
  std::int64_t last_t_us = -1;
  std::int64_t carry_dx = 0;
  std::int64_t carry_dy = 0;
  std::int64_t carry_wheel = 0;

  explicit PipelineState(double ir_baseline) : fsm(ir_baseline) {}
};

// Calibrate over the startup window and seed every stage: the IR Kalman
// starts at the resting baseline, fusion at the first valid accel tilt
// (yaw = 0). Throws NotStationaryError when the window fails the gate.
PipelineState pipeline_init(const PipelineConfig& cfg,
                            std::span<const PhysSample> window);
PipelineState pipeline_init(const PipelineConfig& cfg,
                            std::span<const RawSample> window);

// One sample through the chain. Appends gesture events and reports in
// emission order: button events force immediate reports; a cadence report
// with the accumulated motion goes out once raw.t reaches the report clock.
// A gap (dt > 0.5 s) resets fusion, gesture timing, and the motion
// snapshot, but keeps calibration and held buttons.
void pipeline_step(PipelineState& state, const PhysSample& sample,
                   const PipelineConfig& cfg,
                   std::vector<GestureEvent>& events_out,
                   std::vector<EmittedReport>& reports_out);
void pipeline_step(PipelineState& state, const RawSample& raw,
                   const PipelineConfig& cfg,
                   std::vector<GestureEvent>& events_out,
                   std::vector<EmittedReport>& reports_out);

// Input ended: flush anything still pending (deferred left click).
void pipeline_finish(PipelineState& state,
                     std::vector<GestureEvent>& events_out,
                     std::vector<EmittedReport>& reports_out);

}  // namespace meiga
