#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "housesim/envmodel.hpp"
#include "housesim/wireproto.hpp"

namespace housesim {

class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class LinkParam : uint8_t { LatencyMs, DropProb, BitErrorProb };

struct LinkEvent {
  enum class Kind : uint8_t { Set, Connect, Disconnect };
  int64_t at_ms = 0;
  Kind kind = Kind::Set;
  LinkParam param = LinkParam::LatencyMs;
  double value = 0.0;
  int source_line = 0;
};

// A named observable evaluated by expectations.
struct Probe {
  enum class Kind : uint8_t {
    GreenDisplayLine,  // line 1..4
    GreenTxFrames,
    RedDisplayLine,    // line 1..4
    RedField,          // last-known wire value, absent when stale
    RedLeds,
    RedBuzzer,
    LinkDeliveredBytes,
    LinkDroppedBytes,
  };
  Kind kind = Kind::GreenTxFrames;
  int line = 0;
  FieldId field = FieldId::Temperature;

  bool is_string() const {
    return kind == Kind::GreenDisplayLine || kind == Kind::RedDisplayLine;
  }
};

enum class CompareOp : uint8_t { Eq, Ne, Lt, Le, Gt, Ge };

// `expect <probe> <op> <value> [within <ms>]`. Passes iff the predicate
// holds at some evaluated tick in [at_ms, at_ms + within_ms].
struct Expectation {
  int64_t at_ms = 0;
  Probe probe;
  CompareOp op = CompareOp::Eq;
  int64_t num_value = 0;
  std::string str_value;  // display-line probes compare text
  int64_t within_ms = 0;
  int source_line = 0;
  std::string text;  // original directive, for reporting
};

struct Scenario {
  ScenarioTimeline env_events;
  std::vector<LinkEvent> link_events;
  std::vector<Expectation> expectations;
};

// One directive per line: `at <ms> <kind ...>`. `#` comments and blank
// lines are ignored. Events come out sorted by time, stable in file order.
// Throws ScenarioParseError with a line number and reason.
Scenario parse_scenario(std::string_view text);

std::string_view env_field_name(EnvField field);
std::string_view link_param_name(LinkParam param);

}  // namespace housesim
