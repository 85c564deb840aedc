#include "housesim/wireproto.hpp"

#include <algorithm>
#include <stdexcept>

namespace housesim {

bool value_in_range(FieldId field, int32_t value) {
  switch (field) {
    case FieldId::Rain:
      return value == 0 || value == 1;
    case FieldId::SoilCounts:
      return value >= 0 && value <= 4095;
    default:
      return value >= INT16_MIN && value <= INT16_MAX;
  }
}

bool frame_is_valid(const Frame& frame) {
  return static_cast<uint8_t>(frame.field) < kFieldCount &&
         value_in_range(frame.field, frame.value);
}

WireBytes encode_frame(const Frame& frame) {
  if (!frame_is_valid(frame))
    throw std::invalid_argument("frame violates field/value invariants");
  const auto value = static_cast<uint16_t>(frame.value);
  WireBytes b;
  b[0] = kSyncByte;
  b[1] = static_cast<uint8_t>(frame.field);
  b[2] = frame.seq;
  b[3] = static_cast<uint8_t>(value & 0xFF);
  b[4] = static_cast<uint8_t>(value >> 8);
  b[5] = static_cast<uint8_t>(b[1] ^ b[2] ^ b[3] ^ b[4]);
  return b;
}

namespace {

std::optional<Frame> validate_window(const std::array<uint8_t, kFrameSize>& b) {
  if (b[1] >= kFieldCount) return std::nullopt;
  if (static_cast<uint8_t>(b[1] ^ b[2] ^ b[3] ^ b[4]) != b[5]) return std::nullopt;
  const auto value = static_cast<int16_t>(
      static_cast<uint16_t>(b[3]) | static_cast<uint16_t>(b[4]) << 8);
  const auto field = static_cast<FieldId>(b[1]);
  if (!value_in_range(field, value)) return std::nullopt;
  return Frame{field, b[2], value};
}

}  // namespace

std::optional<Frame> FrameDecoder::push(uint8_t byte) {
  if (len_ == 0 && byte != kSyncByte) {
    ++rejected_;
    return std::nullopt;
  }
  buf_[len_++] = byte;
  if (len_ < kFrameSize) return std::nullopt;

  if (auto frame = validate_window(buf_)) {
    len_ = 0;
    return frame;
  }

  // Discard the leading sync byte, then rescan for the next sync.
  ++rejected_;
  std::size_t i = 1;
  while (i < kFrameSize && buf_[i] != kSyncByte) {
    ++i;
    ++rejected_;
  }
  const std::size_t remaining = kFrameSize - i;
  std::copy(buf_.begin() + i, buf_.end(), buf_.begin());
  len_ = remaining;
  return std::nullopt;
}

SchedulerSlot RoundRobinScheduler::next() {
  SchedulerSlot slot{static_cast<FieldId>(index_), seq_};
  index_ = static_cast<uint8_t>((index_ + 1) % kFieldCount);
  ++seq_;  // wraps mod 256
  return slot;
}

}  // namespace housesim
