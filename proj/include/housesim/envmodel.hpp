#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace housesim {

// Ground-truth physical conditions at one simulation instant.
// Defaults are the alert-free mid-range baseline used before the first
// scenario event.
struct EnvironmentState {
  double temperature_c = 25.0;
  double humidity_pct = 50.0;          // 0..100
  double soil_moisture_frac = 0.5;     // 0 = fully dry, 1 = saturated
  bool raining = false;
  double obstacle_distance_cm = 100.0; // >= 0, measured from the gate
};

// Quantized sensor outputs. All values stay inside the declared sensor
// ranges for any finite environment.
struct SensorReadings {
  int temp_c_int = 0;      // 0..50 degC
  int hum_pct_int = 0;     // 20..90 %RH
  int soil_counts = 0;     // 0..4095 ADC counts
  bool rain_digital = false;
  int echo_us = 0;         // 116..23200 us round-trip echo

  friend bool operator==(const SensorReadings&, const SensorReadings&) = default;
};

enum class EnvField : uint8_t {
  TemperatureC,
  HumidityPct,
  SoilMoistureFrac,
  Raining,
  ObstacleDistanceCm,
};

// One timeline entry. ramp_over_ms == 0 means a step change at at_ms;
// otherwise the field moves linearly from its value at at_ms to `value`
// over ramp_over_ms milliseconds.
struct EnvEvent {
  int64_t at_ms = 0;
  EnvField field = EnvField::TemperatureC;
  double value = 0.0;      // for Raining: 0 or 1
  int64_t ramp_over_ms = 0;
};

// Sorted by at_ms (stable for equal times).
using ScenarioTimeline = std::vector<EnvEvent>;

// State after applying all events with time <= t_ms. Event boundaries are
// inclusive; defaults apply before the first event.
EnvironmentState env_at(std::span<const EnvEvent> timeline, int64_t t_ms);

struct Dht11Reading {
  int temp_c = 0;
  int hum_pct = 0;
};

// Integer quantization with DHT11-class range clamping.
Dht11Reading sample_dht11(const EnvironmentState& env);

// Direct mapping, 0 = dry, 4095 = saturated.
int sample_soil(const EnvironmentState& env);

// Digital output follows the rain state on the same sample, no hysteresis.
bool sample_rain(const EnvironmentState& env);

// Round-trip echo time at 58 us/cm, distance clamped to 2..400 cm,
// 1 us timer resolution.
int sample_ultrasonic(const EnvironmentState& env);

// Echo time back to distance in tenths of a centimeter.
int echo_to_cm_tenths(int echo_us);

// All five sensors over one environment snapshot.
SensorReadings sample_all(const EnvironmentState& env);

// Rounding used everywhere in the sensor models: half away from zero.
long round_half_away(double v);

}  // namespace housesim
