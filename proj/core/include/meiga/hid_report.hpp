#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "meiga/blink_gesture.hpp"

namespace meiga {

inline constexpr std::uint8_t kButtonLeft = 0x01;
inline constexpr std::uint8_t kButtonRight = 0x02;
inline constexpr std::uint8_t kButtonMiddle = 0x04;
inline constexpr std::uint8_t kButtonMask = 0x07;

// 4-byte HID boot-protocol mouse report: [buttons, dx, dy, wheel] with
// two's-complement deltas in [-127, 127] (-128 is never emitted) and
// reserved button bits zero.
struct HidReport {
  std::uint8_t buttons = 0;
  std::int8_t dx = 0;
  std::int8_t dy = 0;
  std::int8_t wheel = 0;

  std::array<std::uint8_t, 4> bytes() const;

  friend bool operator==(const HidReport&, const HidReport&) = default;
};

struct EncodeResult {
  HidReport report;
  std::int64_t carry_dx = 0;  // excess beyond the byte range, for next report
  std::int64_t carry_dy = 0;
  std::int64_t carry_wheel = 0;
};

// Clamp each delta to [-127, 127] and return the excess as carry; the sum
// of emitted deltas plus final carry always equals the requested deltas.
EncodeResult encode(std::uint8_t buttons, std::int64_t dx, std::int64_t dy,
                    std::int64_t wheel);

struct DecodedReport {
  std::uint8_t buttons = 0;
  int dx = 0;
  int dy = 0;
  int wheel = 0;
};

DecodedReport decode(const std::array<std::uint8_t, 4>& bytes);

struct ClickReports {
  std::vector<HidReport> reports;
  std::uint8_t held = 0;  // buttons carried into subsequent motion reports
};

// Immediate reports for a classified gesture, honoring already-held
// buttons: clicks are a press/release pair, DragLatch presses left and
// leaves it held, DragRelease clears it. BlinkStart/BlinkEnd produce none.
ClickReports click_to_reports(GestureKind kind, std::uint8_t held);

}  // namespace meiga
