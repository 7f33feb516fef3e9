#include "meiga/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace meiga {
namespace {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view v, const std::string& key, int line) {
  double out = 0.0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
    throw ConfigError("invalid number for '" + key + "': " + std::string(v), line);
  return out;
}

std::int64_t parse_int(std::string_view v, const std::string& key, int line) {
  std::int64_t out = 0;
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
    throw ConfigError("invalid integer for '" + key + "': " + std::string(v), line);
  return out;
}

bool parse_bool(std::string_view v, const std::string& key, int line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError("invalid bool for '" + key + "': " + std::string(v), line);
}

// One table drives parsing, writing, and the unknown-key check.
struct Field {
  enum class Type { Double, Int, Bool } type;
  std::function<void(PipelineConfig&, std::string_view, int)> set;
  std::function<std::string(const PipelineConfig&)> get;
};

#define MEIGA_DOUBLE_FIELD(name)                                         \
  {#name,                                                                \
   {Field::Type::Double,                                                 \
    [](PipelineConfig& c, std::string_view v, int ln) {                  \
      c.name = parse_double(v, #name, ln);                               \
    },                                                                   \
    [](const PipelineConfig& c) { return format_double(c.name); }}}
#define MEIGA_INT_FIELD(name)                                            \
  {#name,                                                                \
   {Field::Type::Int,                                                    \
    [](PipelineConfig& c, std::string_view v, int ln) {                  \
      c.name = parse_int(v, #name, ln);                                  \
    },                                                                   \
    [](const PipelineConfig& c) { return std::to_string(c.name); }}}
#define MEIGA_BOOL_FIELD(name)                                           \
  {#name,                                                                \
   {Field::Type::Bool,                                                   \
    [](PipelineConfig& c, std::string_view v, int ln) {                  \
      c.name = parse_bool(v, #name, ln);                                 \
    },                                                                   \
    [](const PipelineConfig& c) { return c.name ? "true" : "false"; }}}

const std::map<std::string, Field, std::less<>>& field_table() {
  static const std::map<std::string, Field, std::less<>> table = {
      MEIGA_DOUBLE_FIELD(A),
      MEIGA_DOUBLE_FIELD(kalman_r),
      MEIGA_DOUBLE_FIELD(kalman_q),
      MEIGA_DOUBLE_FIELD(kalman_p0),
      MEIGA_BOOL_FIELD(kalman_tilt_enabled),
      MEIGA_INT_FIELD(t_right_ms),
      MEIGA_INT_FIELD(t_hold_ms),
      MEIGA_INT_FIELD(debounce_ms),
      MEIGA_DOUBLE_FIELD(blink_delta),
      MEIGA_INT_FIELD(double_blink_gap_ms),
      MEIGA_BOOL_FIELD(middle_click_enabled),
      MEIGA_DOUBLE_FIELD(gain_x),
      MEIGA_DOUBLE_FIELD(gain_y),
      MEIGA_BOOL_FIELD(invert_x),
      MEIGA_BOOL_FIELD(invert_y),
      MEIGA_DOUBLE_FIELD(rate_deadzone_dps),
      MEIGA_DOUBLE_FIELD(roll_deadzone_deg),
      MEIGA_DOUBLE_FIELD(scroll_rate),
      MEIGA_DOUBLE_FIELD(accel_scale),
      MEIGA_DOUBLE_FIELD(gyro_scale),
      MEIGA_INT_FIELD(calib_ms),
      MEIGA_DOUBLE_FIELD(accel_gate_min),
      MEIGA_DOUBLE_FIELD(accel_gate_max),
      MEIGA_DOUBLE_FIELD(report_hz),
  };
  return table;
}

#undef MEIGA_DOUBLE_FIELD
#undef MEIGA_INT_FIELD
#undef MEIGA_BOOL_FIELD

void require_positive(std::vector<std::string>& errs, double v,
                      const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    errs.push_back(std::string(name) + " must be > 0");
}

}  // namespace

std::vector<std::string> validate_config(const PipelineConfig& cfg) {
  std::vector<std::string> errs;

  if (!(cfg.A > 0.0 && cfg.A <= 1.0)) errs.push_back("A must be in (0,1]");
  require_positive(errs, cfg.kalman_r, "kalman_r");
  require_positive(errs, cfg.kalman_q, "kalman_q");
  require_positive(errs, cfg.kalman_p0, "kalman_p0");

  if (cfg.debounce_ms < 0) errs.push_back("debounce_ms must be >= 0");
  if (!(cfg.t_right_ms > cfg.debounce_ms))
    errs.push_back("t_right_ms > debounce_ms required");
  if (!(cfg.t_hold_ms > cfg.t_right_ms))
    errs.push_back("t_hold_ms > t_right_ms required");
  require_positive(errs, cfg.blink_delta, "blink_delta");
  if (cfg.double_blink_gap_ms < 0)
    errs.push_back("double_blink_gap_ms must be >= 0");

  if (!std::isfinite(cfg.gain_x) || !std::isfinite(cfg.gain_y))
    errs.push_back("gain_x and gain_y must be finite");
  if (cfg.rate_deadzone_dps < 0)
    errs.push_back("rate_deadzone_dps must be >= 0");
  if (cfg.roll_deadzone_deg < 0)
    errs.push_back("roll_deadzone_deg must be >= 0");
  if (cfg.scroll_rate < 0) errs.push_back("scroll_rate must be >= 0");

  require_positive(errs, cfg.accel_scale, "accel_scale");
  require_positive(errs, cfg.gyro_scale, "gyro_scale");
  if (cfg.calib_ms <= 0) errs.push_back("calib_ms must be > 0");
  if (!(cfg.accel_gate_min >= 0.0 && cfg.accel_gate_max > cfg.accel_gate_min))
    errs.push_back("accel_gate_max > accel_gate_min >= 0 required");
  require_positive(errs, cfg.report_hz, "report_hz");

  return errs;
}

PipelineConfig parse_config(std::istream& in) {
  PipelineConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    auto eq = sv.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("expected 'key = value'", line_no);
    std::string key(trim(sv.substr(0, eq)));
    std::string_view value = trim(sv.substr(eq + 1));
    auto it = field_table().find(key);
    if (it == field_table().end())
      throw ConfigError("unknown key '" + key + "'", line_no);
    it->second.set(cfg, value, line_no);
  }
  if (auto errs = validate_config(cfg); !errs.empty()) {
    std::string msg = "invalid config:";
    for (const auto& e : errs) msg += " " + e + ";";
    throw ConfigError(msg, 0);
  }
  return cfg;
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path, 0);
  return parse_config(in);
}

void write_config(const PipelineConfig& cfg, std::ostream& out) {
  for (const auto& [name, field] : field_table())
    out << name << " = " << field.get(cfg) << "\n";
}

void save_config(const PipelineConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file: " + path, 0);
  write_config(cfg, out);
}

}  // namespace meiga
