#pragma once

#include <cstdint>

#include "meiga/config.hpp"
#include "meiga/types.hpp"

namespace meiga {

// Sub-pixel bookkeeping between reports. Instead of a fractional remainder
// that gets re-rounded, the state carries the exact running input total and
// the integer total already emitted; the remainder is their difference and
// stays in (-1, 1). This makes the conservation identity
//   sum(emitted) + remainder == sum(accepted input)
// hold exactly, since the emitted integers never feed back into a rounding.
struct CursorAxis {
  double total = 0.0;          // accumulated gain-scaled, deadzone-passed input
  std::int64_t emitted = 0;    // integer pixels/ticks handed out so far
};

double axis_remainder(const CursorAxis& a);

struct CursorState {
  Attitude last_attitude;  // snapshot at the previous report
  CursorAxis x;
  CursorAxis y;
  CursorAxis wheel;
};

struct MotionDeltas {
  int dx = 0;
  int dy = 0;
  int wheel = 0;
};

// Map the attitude change since the previous report to cursor deltas:
// yaw -> horizontal, pitch -> vertical, roll angle -> scroll velocity.
// A per-axis angular rate below rate_deadzone_dps drops that axis's
// contribution entirely, so slow sensor drift never moves the cursor.
// Roll inside roll_deadzone_deg scrolls nothing.
MotionDeltas map_motion(CursorState& state, const Attitude& attitude,
                        const Vec3& gyro_dps, double dt_report_s,
                        const PipelineConfig& cfg);

// Forget accumulated attitude change (sample gap); totals and remainders
// are kept so conservation still holds over the whole stream.
void cursor_rebase(CursorState& state, const Attitude& attitude);

}  // namespace meiga
