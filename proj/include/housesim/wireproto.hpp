#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace housesim {

// Each frame carries exactly one sensor field.
enum class FieldId : uint8_t {
  Temperature = 0,      // value = degC * 10
  Humidity = 1,         // value = %RH * 10
  SoilCounts = 2,       // raw ADC counts, 0..4095
  Rain = 3,             // 0 or 1
  DistanceTenthsCm = 4, // tenths of a centimeter
};

inline constexpr int kFieldCount = 5;
inline constexpr uint8_t kSyncByte = 0xAA;
inline constexpr std::size_t kFrameSize = 6;

inline std::size_t field_index(FieldId f) { return static_cast<std::size_t>(f); }

struct Frame {
  FieldId field = FieldId::Temperature;
  uint8_t seq = 0;
  int16_t value = 0;

  friend bool operator==(const Frame&, const Frame&) = default;
};

// Per-field wire value ranges. Fields without a declared range admit any
// signed 16-bit value.
bool value_in_range(FieldId field, int32_t value);
bool frame_is_valid(const Frame& frame);

using WireBytes = std::array<uint8_t, kFrameSize>;

// [0xAA, field, seq, value_lo, value_hi, checksum], value little-endian
// two's-complement, checksum = XOR of bytes 1..4.
// Throws std::invalid_argument if the frame violates its invariants.
WireBytes encode_frame(const Frame& frame);

// Streaming decoder with resynchronization. Emits a frame exactly when six
// bytes starting at a sync byte validate; on any validation failure it
// discards one byte and rescans from the next sync byte. Malformed input
// never raises, it only grows the rejected-bytes counter.
class FrameDecoder {
 public:
  std::optional<Frame> push(uint8_t byte);

  int64_t rejected_bytes() const { return rejected_; }
  std::size_t buffered() const { return len_; }

 private:
  std::array<uint8_t, kFrameSize> buf_{};
  std::size_t len_ = 0;
  int64_t rejected_ = 0;
};

struct SchedulerSlot {
  FieldId field;
  uint8_t seq;
};

// Fixed cycle Temperature -> Humidity -> SoilCounts -> Rain ->
// DistanceTenthsCm; seq increments by 1 mod 256 per emitted frame.
class RoundRobinScheduler {
 public:
  SchedulerSlot next();

 private:
  uint8_t index_ = 0;
  uint8_t seq_ = 0;
};

}  // namespace housesim
