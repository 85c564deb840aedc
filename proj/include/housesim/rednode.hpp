#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "housesim/btlink.hpp"
#include "housesim/display.hpp"
#include "housesim/pinmap.hpp"
#include "housesim/trace.hpp"
#include "housesim/wireproto.hpp"

namespace housesim {

// Lit LED count for a soil reading: thresholds at 10 %, 40 % and 70 % of
// full scale, monotone and surjective onto {0,1,2,3}.
int led_count(int soil_counts);

// Per-field last-known values, already staleness-filtered. Absent fields
// render as "--".
using KnownValues = std::array<std::optional<int16_t>, kFieldCount>;

DisplayBuffer render_slave_display(const KnownValues& values);

// Slave node: decodes incoming frames, tracks last-known values with a
// staleness timeout, drives the three soil LEDs and the rain buzzer.
// Receive-only, it never writes to the channel.
class SlaveNode {
 public:
  static constexpr int64_t kStalenessTimeoutMs = 5000;

  void step(ByteChannel& channel, int64_t now_ms, TraceWriter& trace);

  // Value received within the staleness timeout, else nullopt.
  std::optional<int16_t> fresh_value(FieldId field, int64_t now_ms) const;
  KnownValues fresh_values(int64_t now_ms) const;

  const DisplayBuffer& display() const { return display_; }
  int leds() const { return leds_; }
  bool buzzer() const { return buzzer_; }
  int64_t rx_frames() const { return rx_frames_; }
  int64_t rejected_bytes() const { return decoder_.rejected_bytes(); }

 private:
  struct Received {
    int16_t value;
    int64_t at_ms;
  };

  FrameDecoder decoder_;
  std::array<std::optional<Received>, kFieldCount> last_{};
  DisplayBuffer display_;
  KnownValues rendered_values_{};
  bool rendered_once_ = false;
  int leds_ = 0;
  bool buzzer_ = false;
  int64_t rx_frames_ = 0;
  int64_t traced_rejects_ = 0;
};

}  // namespace housesim
