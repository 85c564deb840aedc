#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "housesim/btlink.hpp"
#include "housesim/display.hpp"
#include "housesim/envmodel.hpp"
#include "housesim/pinmap.hpp"
#include "housesim/trace.hpp"
#include "housesim/wireproto.hpp"

namespace housesim {

// Wire value for one field of a sampling round.
int16_t field_wire_value(const SensorReadings& readings, FieldId field);

// line1 "T:<t>C H:<h>%", line2 "Dist:<d.d>cm", line3 "Soil:<pct>%",
// line4 "Rain:<YES|NO>". Pure function of the readings.
DisplayBuffer render_master_display(const SensorReadings& readings);

// Master node: samples every sample period, transmits exactly one frame per
// transmit slot via round-robin. Fire and forget, it never reads the channel.
class MasterNode {
 public:
  static constexpr int64_t kSamplePeriodMs = 1000;
  static constexpr int64_t kTransmitPeriodMs = 200;

  void step(const EnvironmentState& env, ByteChannel& channel, int64_t now_ms,
            TraceWriter& trace);

  const DisplayBuffer& display() const { return display_; }
  const SensorReadings& last_readings() const { return readings_; }
  int64_t tx_frames() const { return tx_frames_; }
  std::optional<int16_t> last_sent(FieldId field) const {
    return last_sent_[field_index(field)];
  }

 private:
  SensorReadings readings_{};
  RoundRobinScheduler scheduler_;
  DisplayBuffer display_;
  int64_t tx_frames_ = 0;
  std::array<std::optional<int16_t>, kFieldCount> last_sent_{};
};

}  // namespace housesim
