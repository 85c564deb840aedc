#include "housesim/sim.hpp"

#include <cstdio>

#include "json.hpp"

namespace housesim {

namespace {

constexpr const char* kGreenAddr = "98d3:b1:24fa61";
constexpr const char* kRedAddr = "98d3:b2:71c9e5";

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// AT responses go into the trace without their final CRLF; any inner
// control characters are escaped so lines stay one per event.
std::string trace_response(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  std::string out;
  for (const char c : s) {
    if (c == '\r')
      out += "\\r";
    else if (c == '\n')
      out += "\\n";
    else
      out += c;
  }
  return out;
}

void trace_display(TraceWriter& trace, int64_t t, std::string_view actor,
                   const DisplayBuffer& d) {
  trace.event(t, actor, "DISPLAY",
              {{"l1", d.lines[0]}, {"l2", d.lines[1]}, {"l3", d.lines[2]}, {"l4", d.lines[3]}});
}

bool compare(CompareOp op, int64_t lhs, int64_t rhs) {
  switch (op) {
    case CompareOp::Eq: return lhs == rhs;
    case CompareOp::Ne: return lhs != rhs;
    case CompareOp::Lt: return lhs < rhs;
    case CompareOp::Le: return lhs <= rhs;
    case CompareOp::Gt: return lhs > rhs;
    case CompareOp::Ge: return lhs >= rhs;
  }
  return false;
}

}  // namespace

Simulation::Simulation(Scenario scenario, SimOptions options)
    : scenario_(std::move(scenario)),
      opts_(options),
      green_bt_(kGreenAddr),
      red_bt_(kRedAddr),
      channel_(options.seed) {}

void Simulation::configure(TraceWriter& trace, SimReport& report) {
  if (opts_.skip_config) {
    // Start pre-paired: role, baud and binding applied directly.
    green_bt_.config().role = Hc05Role::Master;
    green_bt_.config().baud = opts_.baud;
    green_bt_.config().bound_addr = kRedAddr;
    red_bt_.config().role = Hc05Role::Slave;
    red_bt_.config().baud = opts_.baud;
  } else {
    const std::string uart_cmd = "AT+UART=" + std::to_string(opts_.baud) + ",0,0";
    const auto issue = [&](Hc05Module& module, std::string_view actor, std::string_view cmd) {
      const auto resp = module.at_command(cmd);
      trace.event(0, actor, "AT",
                  {{"cmd", std::string(cmd)},
                   {"resp", resp ? trace_response(*resp) : std::string("none")}});
    };
    issue(green_bt_, "GREEN", "AT");
    issue(green_bt_, "GREEN", "AT+ROLE=1");
    issue(green_bt_, "GREEN", uart_cmd);
    issue(green_bt_, "GREEN", std::string("AT+BIND=") + kRedAddr);
    issue(red_bt_, "RED", "AT");
    issue(red_bt_, "RED", "AT+ROLE=0");
    issue(red_bt_, "RED", uart_cmd);
  }
  green_bt_.set_mode(Hc05Mode::DataMode);
  red_bt_.set_mode(Hc05Mode::DataMode);

  if (trace.enabled()) {
    std::vector<TraceKv> kv;
    for (const PinAssignment& p : kGreenPinMap) kv.emplace_back(p.name, p.pin);
    trace.event(0, "GREEN", "PINMAP", std::span<const TraceKv>(kv));
    kv.clear();
    for (const PinAssignment& p : kRedPinMap) kv.emplace_back(p.name, p.pin);
    trace.event(0, "RED", "PINMAP", std::span<const TraceKv>(kv));
  }

  report.connect_ok = try_connect(green_bt_, red_bt_, channel_);
  trace.event(0, "LINK", "CONNECT",
              {{"ok", report.connect_ok ? "1" : "0"}, {"baud", std::to_string(opts_.baud)}});

  channel_.impairments().latency_ms = opts_.latency_ms;
  channel_.impairments().drop_prob = opts_.drop_prob;
  channel_.impairments().bit_error_prob = opts_.bit_error_prob;
  if (opts_.log_deliveries) channel_.enable_delivery_log();
}

bool Simulation::evaluate(const Expectation& e, int64_t now_ms) const {
  if (e.probe.is_string()) {
    const DisplayBuffer& d =
        e.probe.kind == Probe::Kind::GreenDisplayLine ? green_.display() : red_.display();
    const std::string& line = d.lines[static_cast<std::size_t>(e.probe.line - 1)];
    return e.op == CompareOp::Eq ? line == e.str_value : line != e.str_value;
  }
  std::optional<int64_t> value;
  switch (e.probe.kind) {
    case Probe::Kind::GreenTxFrames: value = green_.tx_frames(); break;
    case Probe::Kind::RedField: {
      const auto v = red_.fresh_value(e.probe.field, now_ms);
      if (v) value = *v;
      break;
    }
    case Probe::Kind::RedLeds: value = red_.leds(); break;
    case Probe::Kind::RedBuzzer: value = red_.buzzer() ? 1 : 0; break;
    case Probe::Kind::LinkDeliveredBytes: value = channel_.delivered_bytes(); break;
    case Probe::Kind::LinkDroppedBytes: value = channel_.dropped_bytes(); break;
    default: break;
  }
  if (!value) return false;  // absent or stale never satisfies a predicate
  return compare(e.op, *value, e.num_value);
}

SimReport Simulation::run(std::ostream* trace_out) {
  TraceWriter trace(trace_out);
  SimReport report;
  configure(trace, report);

  std::vector<ExpectState> expects;
  expects.reserve(scenario_.expectations.size());
  for (const Expectation& e : scenario_.expectations) expects.push_back(ExpectState{&e});

  std::size_t next_link = 0;
  std::size_t next_expect = 0;
  std::size_t active_from = 0;

  for (int64_t t = 0; t <= opts_.duration_ms; ++t) {
    // 1. scenario events
    while (next_link < scenario_.link_events.size() &&
           scenario_.link_events[next_link].at_ms <= t) {
      const LinkEvent& e = scenario_.link_events[next_link++];
      switch (e.kind) {
        case LinkEvent::Kind::Set: {
          auto& imp = channel_.impairments();
          if (e.param == LinkParam::LatencyMs)
            imp.latency_ms = static_cast<int64_t>(e.value);
          else if (e.param == LinkParam::DropProb)
            imp.drop_prob = e.value;
          else
            imp.bit_error_prob = e.value;
          trace.event(t, "LINK", "SET",
                      {{"param", std::string(link_param_name(e.param))},
                       {"value", format_real(e.value)}});
          break;
        }
        case LinkEvent::Kind::Connect: {
          const bool ok = channel_.reconnect(green_bt_, red_bt_);
          trace.event(t, "LINK", "CONNECT",
                      {{"ok", ok ? "1" : "0"}, {"baud", std::to_string(channel_.baud())}});
          break;
        }
        case LinkEvent::Kind::Disconnect:
          channel_.disconnect();
          trace.event(t, "LINK", "DISCONNECT");
          break;
      }
    }
    while (next_expect < expects.size() && expects[next_expect].e->at_ms <= t) ++next_expect;

    // 2. environment, 3. master, 4. delivery + slave
    const EnvironmentState env = env_at(scenario_.env_events, t);
    green_.step(env, channel_, t, trace);
    red_.step(channel_, t, trace);

    if (opts_.snapshot_every_ms > 0 && t % opts_.snapshot_every_ms == 0) {
      trace_display(trace, t, "GREEN", green_.display());
      trace_display(trace, t, "RED", red_.display());
    }

    // 5. expectations active at this tick
    for (std::size_t i = active_from; i < next_expect; ++i) {
      ExpectState& st = expects[i];
      if (st.done) {
        if (i == active_from) ++active_from;
        continue;
      }
      if (t > st.e->at_ms + st.e->within_ms) {
        st.done = true;  // window elapsed without the predicate holding
        continue;
      }
      if (evaluate(*st.e, t)) {
        st.done = true;
        st.passed = true;
        st.held_at = t;
      }
    }
  }

  for (const ExpectState& st : expects) {
    report.expects.push_back(
        ExpectOutcome{st.e->source_line, st.e->text, st.passed, st.held_at});
  }
  report.tx_frames = green_.tx_frames();
  report.rx_frames = red_.rx_frames();
  report.delivered_bytes = channel_.delivered_bytes();
  report.dropped_bytes = channel_.dropped_bytes();
  report.rejected_bytes = red_.rejected_bytes();
  report.green_display = green_.display().lines;
  report.red_display = red_.display().lines;
  return report;
}

void print_report(std::ostream& out, const SimReport& report, const SimOptions& options,
                  const std::string& scenario_name) {
  out << "scenario: " << scenario_name << '\n';
  out << "duration_ms=" << options.duration_ms << " seed=" << options.seed
      << " baud=" << options.baud << '\n';
  out << "connect: " << (report.connect_ok ? "ok" : "FAILED (warning)") << '\n';
  for (const ExpectOutcome& e : report.expects) {
    out << "expect[line " << e.source_line << "] " << e.text << " -> "
        << (e.passed ? "PASS" : "FAIL");
    if (e.passed) out << " (held at t=" << e.held_at_ms << ")";
    out << '\n';
  }
  out << "counters: tx_frames=" << report.tx_frames << " rx_frames=" << report.rx_frames
      << " delivered_bytes=" << report.delivered_bytes
      << " dropped_bytes=" << report.dropped_bytes
      << " rejected_bytes=" << report.rejected_bytes << '\n';
  const auto join = [](const std::array<std::string, kDisplayLines>& lines) {
    std::string s;
    for (const auto& l : lines) {
      if (!s.empty()) s += " | ";
      s += l;
    }
    return s;
  };
  out << "green: " << join(report.green_display) << '\n';
  out << "red:   " << join(report.red_display) << '\n';
  out << "result: " << (report.all_passed() ? "PASS" : "FAIL") << '\n';
}

std::string report_to_json(const SimReport& report, const SimOptions& options,
                           const std::string& scenario_name) {
  nlohmann::json j;
  j["scenario"] = scenario_name;
  j["duration_ms"] = options.duration_ms;
  j["seed"] = options.seed;
  j["baud"] = options.baud;
  j["connect_ok"] = report.connect_ok;
  j["tx_frames"] = report.tx_frames;
  j["rx_frames"] = report.rx_frames;
  j["delivered_bytes"] = report.delivered_bytes;
  j["dropped_bytes"] = report.dropped_bytes;
  j["rejected_bytes"] = report.rejected_bytes;
  j["expect_total"] = report.expects.size();
  std::size_t failed = 0;
  nlohmann::json expects = nlohmann::json::array();
  for (const ExpectOutcome& e : report.expects) {
    if (!e.passed) ++failed;
    expects.push_back({{"line", e.source_line},
                       {"text", e.text},
                       {"passed", e.passed},
                       {"held_at_ms", e.held_at_ms}});
  }
  j["expect_failed"] = failed;
  j["expects"] = expects;
  j["green_display"] = report.green_display;
  j["red_display"] = report.red_display;
  j["result"] = report.all_passed() ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

}  // namespace housesim
