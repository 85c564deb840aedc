#include "housesim/greennode.hpp"

namespace housesim {

int16_t field_wire_value(const SensorReadings& readings, FieldId field) {
  switch (field) {
    case FieldId::Temperature:
      return static_cast<int16_t>(readings.temp_c_int * 10);
    case FieldId::Humidity:
      return static_cast<int16_t>(readings.hum_pct_int * 10);
    case FieldId::SoilCounts:
      return static_cast<int16_t>(readings.soil_counts);
    case FieldId::Rain:
      return readings.rain_digital ? 1 : 0;
    case FieldId::DistanceTenthsCm:
      return static_cast<int16_t>(echo_to_cm_tenths(readings.echo_us));
  }
  return 0;
}

DisplayBuffer render_master_display(const SensorReadings& r) {
  DisplayBuffer d;
  d.set_line(0, "T:" + std::to_string(r.temp_c_int) + "C H:" +
                    std::to_string(r.hum_pct_int) + "%");
  d.set_line(1, "Dist:" + format_tenths(echo_to_cm_tenths(r.echo_us)) + "cm");
  d.set_line(2, "Soil:" + std::to_string(soil_counts_to_pct(r.soil_counts)) + "%");
  d.set_line(3, r.rain_digital ? "Rain:YES" : "Rain:NO");
  return d;
}

void MasterNode::step(const EnvironmentState& env, ByteChannel& channel,
                      int64_t now_ms, TraceWriter& trace) {
  if (now_ms % kSamplePeriodMs == 0) {
    readings_ = sample_all(env);
    trace.event(now_ms, "GREEN", "SAMPLE",
                {{"temp", std::to_string(readings_.temp_c_int)},
                 {"hum", std::to_string(readings_.hum_pct_int)},
                 {"soil", std::to_string(readings_.soil_counts)},
                 {"rain", readings_.rain_digital ? "1" : "0"},
                 {"echo_us", std::to_string(readings_.echo_us)}});
    DisplayBuffer next = render_master_display(readings_);
    if (next != display_) {
      display_ = std::move(next);
      trace.event(now_ms, "GREEN", "DISPLAY",
                  {{"l1", display_.lines[0]},
                   {"l2", display_.lines[1]},
                   {"l3", display_.lines[2]},
                   {"l4", display_.lines[3]}});
    }
  }

  if (now_ms % kTransmitPeriodMs == 0) {
    const SchedulerSlot slot = scheduler_.next();
    const Frame frame{slot.field, slot.seq, field_wire_value(readings_, slot.field)};
    const WireBytes bytes = encode_frame(frame);
    // Fire and forget: a disconnected link discards the bytes, the master
    // neither buffers nor retries.
    channel.send_bytes(LinkDir::AToB, bytes, now_ms);
    ++tx_frames_;
    last_sent_[field_index(slot.field)] = frame.value;
    trace.event(now_ms, "GREEN", "TX_FRAME",
                {{"field", std::to_string(static_cast<int>(slot.field))},
                 {"seq", std::to_string(slot.seq)},
                 {"value", std::to_string(frame.value)}});
  }
}

}  // namespace housesim
