#include "housesim/envmodel.hpp"

#include <algorithm>
#include <cmath>

namespace housesim {

long round_half_away(double v) { return std::lround(v); }

namespace {

// Piecewise value of one field: constant, or linear inside an active ramp.
struct Track {
  bool ramping = false;
  double value = 0.0;
  int64_t t0 = 0, t1 = 0;
  double v0 = 0.0, v1 = 0.0;
};

double eval(const Track& tr, int64_t t) {
  if (!tr.ramping) return tr.value;
  if (t <= tr.t0) return tr.v0;
  if (t >= tr.t1) return tr.v1;
  return tr.v0 + (tr.v1 - tr.v0) * (static_cast<double>(t - tr.t0) /
                                    static_cast<double>(tr.t1 - tr.t0));
}

constexpr int kEnvFieldCount = 5;

int clamp_int(long v, int lo, int hi) {
  return static_cast<int>(std::clamp(v, static_cast<long>(lo), static_cast<long>(hi)));
}

}  // namespace

EnvironmentState env_at(std::span<const EnvEvent> timeline, int64_t t_ms) {
  const EnvironmentState defaults{};
  Track tracks[kEnvFieldCount];
  tracks[0].value = defaults.temperature_c;
  tracks[1].value = defaults.humidity_pct;
  tracks[2].value = defaults.soil_moisture_frac;
  tracks[3].value = defaults.raining ? 1.0 : 0.0;
  tracks[4].value = defaults.obstacle_distance_cm;

  for (const EnvEvent& e : timeline) {
    if (e.at_ms > t_ms) break;  // sorted by time
    Track& tr = tracks[static_cast<int>(e.field)];
    const double at_start = eval(tr, e.at_ms);
    if (e.ramp_over_ms <= 0) {
      tr = Track{false, e.value, 0, 0, 0.0, 0.0};
    } else {
      tr = Track{true, 0.0, e.at_ms, e.at_ms + e.ramp_over_ms, at_start, e.value};
    }
  }

  EnvironmentState s;
  s.temperature_c = eval(tracks[0], t_ms);
  s.humidity_pct = eval(tracks[1], t_ms);
  s.soil_moisture_frac = eval(tracks[2], t_ms);
  s.raining = eval(tracks[3], t_ms) != 0.0;
  s.obstacle_distance_cm = eval(tracks[4], t_ms);
  return s;
}

Dht11Reading sample_dht11(const EnvironmentState& env) {
  Dht11Reading r;
  r.temp_c = clamp_int(round_half_away(env.temperature_c), 0, 50);
  r.hum_pct = clamp_int(round_half_away(env.humidity_pct), 20, 90);
  return r;
}

int sample_soil(const EnvironmentState& env) {
  const double frac = std::clamp(env.soil_moisture_frac, 0.0, 1.0);
  return clamp_int(round_half_away(frac * 4095.0), 0, 4095);
}

bool sample_rain(const EnvironmentState& env) { return env.raining; }

int sample_ultrasonic(const EnvironmentState& env) {
  // 58 us/cm round trip at 343 m/s, 1 us timer tick (72 MHz / 72).
  const double d = std::clamp(env.obstacle_distance_cm, 2.0, 400.0);
  return static_cast<int>(round_half_away(d * 58.0));
}

int echo_to_cm_tenths(int echo_us) {
  if (echo_us <= 0) return 0;
  // round(echo * 10 / 58), exact in integer arithmetic
  return static_cast<int>((static_cast<int64_t>(echo_us) * 10 + 29) / 58);
}

SensorReadings sample_all(const EnvironmentState& env) {
  SensorReadings r;
  const Dht11Reading d = sample_dht11(env);
  r.temp_c_int = d.temp_c;
  r.hum_pct_int = d.hum_pct;
  r.soil_counts = sample_soil(env);
  r.rain_digital = sample_rain(env);
  r.echo_us = sample_ultrasonic(env);
  return r;
}

}  // namespace housesim
