#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "housesim/btlink.hpp"
#include "housesim/greennode.hpp"
#include "housesim/rednode.hpp"
#include "housesim/scenario.hpp"
#include "housesim/trace.hpp"

namespace housesim {

struct SimOptions {
  int64_t duration_ms = 0;
  uint64_t seed = 1;
  int baud = 9600;
  int64_t latency_ms = 0;
  double drop_prob = 0.0;
  double bit_error_prob = 0.0;
  int64_t snapshot_every_ms = 0;  // 0 = no snapshots
  bool skip_config = false;       // start pre-paired, no AT phase
  bool log_deliveries = false;    // record per-byte delivery times
};

struct ExpectOutcome {
  int source_line = 0;
  std::string text;
  bool passed = false;
  int64_t held_at_ms = -1;  // first tick where the predicate held
};

struct SimReport {
  bool connect_ok = false;
  std::vector<ExpectOutcome> expects;
  int64_t tx_frames = 0;
  int64_t rx_frames = 0;
  int64_t delivered_bytes = 0;
  int64_t dropped_bytes = 0;
  int64_t rejected_bytes = 0;
  std::array<std::string, kDisplayLines> green_display;
  std::array<std::string, kDisplayLines> red_display;

  bool all_passed() const {
    for (const auto& e : expects)
      if (!e.passed) return false;
    return true;
  }
};

// Deterministic millisecond-tick loop over one scenario. Single-threaded;
// per tick the order is: scenario events, environment lookup, master step,
// slave step, snapshots, expectation evaluation.
class Simulation {
 public:
  Simulation(Scenario scenario, SimOptions options);

  // trace_out may be null (tracing disabled).
  SimReport run(std::ostream* trace_out);

  // Post-run inspection hooks for tests.
  const MasterNode& green() const { return green_; }
  const SlaveNode& red() const { return red_; }
  const ByteChannel& channel() const { return channel_; }

 private:
  struct ExpectState {
    const Expectation* e;
    bool done = false;
    bool passed = false;
    int64_t held_at = -1;
  };

  void configure(TraceWriter& trace, SimReport& report);
  bool evaluate(const Expectation& e, int64_t now_ms) const;

  Scenario scenario_;
  SimOptions opts_;
  Hc05Module green_bt_;
  Hc05Module red_bt_;
  ByteChannel channel_;
  MasterNode green_;
  SlaveNode red_;
};

// Fixed flat key set; see docs/protocol.md.
std::string report_to_json(const SimReport& report, const SimOptions& options,
                           const std::string& scenario_name);
void print_report(std::ostream& out, const SimReport& report, const SimOptions& options,
                  const std::string& scenario_name);

}  // namespace housesim
