#include "housesim/rednode.hpp"

namespace housesim {

int led_count(int soil_counts) {
  // threshold k/10 lit iff counts/4095 >= k/10, evaluated in integers
  const int64_t c10 = 10LL * soil_counts;
  int n = 0;
  n += c10 >= 1 * 4095;
  n += c10 >= 4 * 4095;
  n += c10 >= 7 * 4095;
  return n;
}

DisplayBuffer render_slave_display(const KnownValues& v) {
  const auto tenths_or = [](const std::optional<int16_t>& x) {
    return x ? format_tenths(*x) : std::string("--");
  };
  const auto& soil = v[field_index(FieldId::SoilCounts)];
  const auto& rain = v[field_index(FieldId::Rain)];

  DisplayBuffer d;
  d.set_line(0, "T:" + tenths_or(v[field_index(FieldId::Temperature)]) + "C H:" +
                    tenths_or(v[field_index(FieldId::Humidity)]) + "%");
  d.set_line(1, "Dist:" + tenths_or(v[field_index(FieldId::DistanceTenthsCm)]) + "cm");
  d.set_line(2, "Soil:" + (soil ? std::to_string(soil_counts_to_pct(*soil)) : std::string("--")) + "%");
  d.set_line(3, std::string("Rain:") + (rain ? (*rain ? "YES" : "NO") : "--"));
  return d;
}

std::optional<int16_t> SlaveNode::fresh_value(FieldId field, int64_t now_ms) const {
  const auto& r = last_[field_index(field)];
  if (!r || now_ms - r->at_ms > kStalenessTimeoutMs) return std::nullopt;
  return r->value;
}

KnownValues SlaveNode::fresh_values(int64_t now_ms) const {
  KnownValues v;
  for (int i = 0; i < kFieldCount; ++i)
    v[static_cast<std::size_t>(i)] = fresh_value(static_cast<FieldId>(i), now_ms);
  return v;
}

void SlaveNode::step(ByteChannel& channel, int64_t now_ms, TraceWriter& trace) {
  const std::vector<uint8_t> bytes = channel.poll_receive(LinkDir::AToB, now_ms);
  for (const uint8_t b : bytes) {
    if (auto frame = decoder_.push(b)) {
      last_[field_index(frame->field)] = Received{frame->value, now_ms};
      ++rx_frames_;
      trace.event(now_ms, "RED", "RX_FRAME",
                  {{"field", std::to_string(static_cast<int>(frame->field))},
                   {"seq", std::to_string(frame->seq)},
                   {"value", std::to_string(frame->value)}});
    }
  }
  if (decoder_.rejected_bytes() > traced_rejects_) {
    trace.event(now_ms, "RED", "DECODE_REJECT",
                {{"bytes", std::to_string(decoder_.rejected_bytes() - traced_rejects_)}});
    traced_rejects_ = decoder_.rejected_bytes();
  }

  // Alert and display state follow the last-known values; anything older
  // than the staleness timeout is treated as absent.
  const KnownValues values = fresh_values(now_ms);
  const auto& soil = values[field_index(FieldId::SoilCounts)];
  const auto& rain = values[field_index(FieldId::Rain)];
  const int new_leds = soil ? led_count(*soil) : 0;
  const bool new_buzzer = rain && *rain == 1;

  if (new_leds != leds_) {
    leds_ = new_leds;
    trace.event(now_ms, "RED", "LED", {{"count", std::to_string(leds_)}});
  }
  if (new_buzzer != buzzer_) {
    buzzer_ = new_buzzer;
    trace.event(now_ms, "RED", "BUZZER", {{"on", buzzer_ ? "1" : "0"}});
  }
  if (!rendered_once_ || values != rendered_values_) {
    rendered_once_ = true;
    rendered_values_ = values;
    DisplayBuffer next = render_slave_display(values);
    if (next != display_) {
      display_ = std::move(next);
      trace.event(now_ms, "RED", "DISPLAY",
                  {{"l1", display_.lines[0]},
                   {"l2", display_.lines[1]},
                   {"l3", display_.lines[2]},
                   {"l4", display_.lines[3]}});
    }
  }
}

}  // namespace housesim
