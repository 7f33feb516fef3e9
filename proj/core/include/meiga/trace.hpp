#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "meiga/blink_gesture.hpp"
#include "meiga/pipeline.hpp"
#include "meiga/types.hpp"

namespace meiga {

struct TraceError : std::runtime_error {
  TraceError(const std::string& msg, std::size_t line_no)
      : std::runtime_error(msg), line(line_no) {}
  std::size_t line;  // 1-based, 0 when not tied to a line
};

inline constexpr const char* kPhysTraceHeader =
    "t_us,ax_g,ay_g,az_g,gx_dps,gy_dps,gz_dps,ir_norm";
inline constexpr const char* kRawTraceHeader = "t_us,ax,ay,az,gx,gy,gz,ir";

// CSV traces, one sample per row under the mandatory header. Floats are
// written with 9 significant digits and round-trip losslessly at that
// precision. Timestamps must be strictly increasing.
std::vector<PhysSample> read_phys_trace(std::istream& in);
void write_phys_trace(std::ostream& out, std::span<const PhysSample> samples);

std::vector<RawSample> read_raw_trace(std::istream& in);
void write_raw_trace(std::ostream& out, std::span<const RawSample> samples);

// Event log: one record per line, `<t_us> <kind> <payload>`. Gesture
// records carry the closure duration in ms as payload; report records use
// kind `report` with the four bytes as lowercase hex, e.g.
//   1234567 report 01 05 00 00
struct LogRecord {
  std::int64_t t_us = 0;
  std::string kind;
  std::string payload;

  friend bool operator==(const LogRecord&, const LogRecord&) = default;
};

void append_event(std::ostream& out, const GestureEvent& ev);
void append_report(std::ostream& out, const EmittedReport& rep);
std::vector<LogRecord> read_event_log(std::istream& in);

std::string format_report_payload(const HidReport& report);

}  // namespace meiga
