#include "housesim/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

namespace housesim {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int64_t> parse_i64(std::string_view s) {
  int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_real(std::string_view s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<EnvField> env_field_from(std::string_view name) {
  if (name == "temperature_c") return EnvField::TemperatureC;
  if (name == "humidity_pct") return EnvField::HumidityPct;
  if (name == "soil_moisture_frac") return EnvField::SoilMoistureFrac;
  if (name == "raining") return EnvField::Raining;
  if (name == "obstacle_distance_cm") return EnvField::ObstacleDistanceCm;
  return std::nullopt;
}

std::optional<LinkParam> link_param_from(std::string_view name) {
  if (name == "latency_ms") return LinkParam::LatencyMs;
  if (name == "drop_prob") return LinkParam::DropProb;
  if (name == "bit_error_prob") return LinkParam::BitErrorProb;
  return std::nullopt;
}

std::optional<CompareOp> op_from(std::string_view s) {
  if (s == "==") return CompareOp::Eq;
  if (s == "!=") return CompareOp::Ne;
  if (s == "<") return CompareOp::Lt;
  if (s == "<=") return CompareOp::Le;
  if (s == ">") return CompareOp::Gt;
  if (s == ">=") return CompareOp::Ge;
  return std::nullopt;
}

std::optional<Probe> probe_from(std::string_view name) {
  Probe p;
  const auto display_line = [&](Probe::Kind kind, std::string_view rest) -> std::optional<Probe> {
    if (rest.size() != 5 || !rest.starts_with("line")) return std::nullopt;
    const char n = rest[4];
    if (n < '1' || n > '4') return std::nullopt;
    p.kind = kind;
    p.line = n - '0';
    return p;
  };
  if (name.starts_with("green.display."))
    return display_line(Probe::Kind::GreenDisplayLine, name.substr(14));
  if (name.starts_with("red.display."))
    return display_line(Probe::Kind::RedDisplayLine, name.substr(12));
  if (name == "green.tx_frames") {
    p.kind = Probe::Kind::GreenTxFrames;
    return p;
  }
  const auto field = [&](FieldId f) {
    p.kind = Probe::Kind::RedField;
    p.field = f;
    return p;
  };
  if (name == "red.temp") return field(FieldId::Temperature);
  if (name == "red.hum") return field(FieldId::Humidity);
  if (name == "red.soil") return field(FieldId::SoilCounts);
  if (name == "red.rain") return field(FieldId::Rain);
  if (name == "red.dist") return field(FieldId::DistanceTenthsCm);
  if (name == "red.leds") {
    p.kind = Probe::Kind::RedLeds;
    return p;
  }
  if (name == "red.buzzer") {
    p.kind = Probe::Kind::RedBuzzer;
    return p;
  }
  if (name == "link.delivered_bytes") {
    p.kind = Probe::Kind::LinkDeliveredBytes;
    return p;
  }
  if (name == "link.dropped_bytes") {
    p.kind = Probe::Kind::LinkDroppedBytes;
    return p;
  }
  return std::nullopt;
}

// Range checks keep every reachable EnvironmentState inside its invariants;
// ramps interpolate between validated endpoints.
void check_env_value(int line_no, EnvField field, double v) {
  switch (field) {
    case EnvField::HumidityPct:
      if (v < 0.0 || v > 100.0)
        throw ScenarioParseError(line_no, "humidity_pct out of range [0,100]");
      break;
    case EnvField::SoilMoistureFrac:
      if (v < 0.0 || v > 1.0)
        throw ScenarioParseError(line_no, "soil_moisture_frac out of range [0,1]");
      break;
    case EnvField::Raining:
      if (v != 0.0 && v != 1.0)
        throw ScenarioParseError(line_no, "raining must be 0 or 1");
      break;
    case EnvField::ObstacleDistanceCm:
      if (v < 0.0)
        throw ScenarioParseError(line_no, "obstacle_distance_cm must be >= 0");
      break;
    case EnvField::TemperatureC:
      break;
  }
}

std::string join_tokens(const std::vector<std::string_view>& tokens, std::size_t first,
                        std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

std::string_view env_field_name(EnvField field) {
  switch (field) {
    case EnvField::TemperatureC: return "temperature_c";
    case EnvField::HumidityPct: return "humidity_pct";
    case EnvField::SoilMoistureFrac: return "soil_moisture_frac";
    case EnvField::Raining: return "raining";
    case EnvField::ObstacleDistanceCm: return "obstacle_distance_cm";
  }
  return "?";
}

std::string_view link_param_name(LinkParam param) {
  switch (param) {
    case LinkParam::LatencyMs: return "latency_ms";
    case LinkParam::DropProb: return "drop_prob";
    case LinkParam::BitErrorProb: return "bit_error_prob";
  }
  return "?";
}

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    const auto tok = split_ws(hash == std::string_view::npos ? line : line.substr(0, hash));
    if (tok.empty()) continue;

    if (tok[0] != "at") throw ScenarioParseError(line_no, "expected 'at <ms> ...'");
    if (tok.size() < 3) throw ScenarioParseError(line_no, "incomplete directive");
    const auto at_ms = parse_i64(tok[1]);
    if (!at_ms || *at_ms < 0) throw ScenarioParseError(line_no, "invalid time");

    const std::string_view kind = tok[2];
    if (kind == "set" || kind == "ramp") {
      const bool is_ramp = kind == "ramp";
      if (tok.size() < 5) throw ScenarioParseError(line_no, "incomplete directive");
      const auto field = env_field_from(tok[3]);
      if (!field)
        throw ScenarioParseError(line_no, "unknown env field '" + std::string(tok[3]) + "'");
      const auto value = parse_real(tok[4]);
      if (!value) throw ScenarioParseError(line_no, "invalid value");
      check_env_value(line_no, *field, *value);
      EnvEvent e;
      e.at_ms = *at_ms;
      e.field = *field;
      e.value = *value;
      if (is_ramp) {
        if (*field == EnvField::Raining)
          throw ScenarioParseError(line_no, "cannot ramp raining");
        if (tok.size() != 7 || tok[5] != "over")
          throw ScenarioParseError(line_no, "expected 'over <ms>'");
        const auto over = parse_i64(tok[6]);
        if (!over || *over < 0) throw ScenarioParseError(line_no, "invalid ramp duration");
        e.ramp_over_ms = *over;
      } else if (tok.size() != 5) {
        throw ScenarioParseError(line_no, "trailing tokens after set");
      }
      sc.env_events.push_back(e);
    } else if (kind == "link") {
      if (tok.size() < 4) throw ScenarioParseError(line_no, "incomplete directive");
      LinkEvent e;
      e.at_ms = *at_ms;
      e.source_line = line_no;
      if (tok[3] == "connect" || tok[3] == "disconnect") {
        if (tok.size() != 4) throw ScenarioParseError(line_no, "trailing tokens");
        e.kind = tok[3] == "connect" ? LinkEvent::Kind::Connect : LinkEvent::Kind::Disconnect;
      } else {
        const auto param = link_param_from(tok[3]);
        if (!param)
          throw ScenarioParseError(line_no, "unknown link parameter '" + std::string(tok[3]) + "'");
        if (tok.size() != 5) throw ScenarioParseError(line_no, "expected one value");
        const auto value = parse_real(tok[4]);
        if (!value) throw ScenarioParseError(line_no, "invalid value");
        if (*param == LinkParam::LatencyMs) {
          if (*value < 0) throw ScenarioParseError(line_no, "latency_ms must be >= 0");
        } else if (*value < 0.0 || *value > 1.0) {
          throw ScenarioParseError(line_no, "probability out of range [0,1]");
        }
        e.kind = LinkEvent::Kind::Set;
        e.param = *param;
        e.value = *value;
      }
      sc.link_events.push_back(e);
    } else if (kind == "expect") {
      if (tok.size() < 6) throw ScenarioParseError(line_no, "incomplete expectation");
      const auto probe = probe_from(tok[3]);
      if (!probe)
        throw ScenarioParseError(line_no, "unknown probe '" + std::string(tok[3]) + "'");
      const auto op = op_from(tok[4]);
      if (!op) throw ScenarioParseError(line_no, "unknown comparison operator");
      if (probe->is_string() && *op != CompareOp::Eq && *op != CompareOp::Ne)
        throw ScenarioParseError(line_no, "display lines support only == and !=");

      std::size_t value_end = tok.size();
      Expectation e;
      if (tok.size() >= 7 && tok[tok.size() - 2] == "within") {
        const auto within = parse_i64(tok.back());
        if (!within || *within < 0) throw ScenarioParseError(line_no, "invalid window");
        e.within_ms = *within;
        value_end = tok.size() - 2;
      }
      if (value_end < 6) throw ScenarioParseError(line_no, "missing expected value");
      e.at_ms = *at_ms;
      e.probe = *probe;
      e.op = *op;
      e.source_line = line_no;
      e.text = join_tokens(tok, 0, tok.size());
      if (probe->is_string()) {
        e.str_value = join_tokens(tok, 5, value_end);
      } else {
        if (value_end != 6) throw ScenarioParseError(line_no, "expected one numeric value");
        const auto v = parse_i64(tok[5]);
        if (!v) throw ScenarioParseError(line_no, "invalid value");
        e.num_value = *v;
      }
      sc.expectations.push_back(e);
    } else {
      throw ScenarioParseError(line_no, "unknown directive '" + std::string(kind) + "'");
    }
  }

  const auto by_time = [](const auto& a, const auto& b) { return a.at_ms < b.at_ms; };
  std::stable_sort(sc.env_events.begin(), sc.env_events.end(), by_time);
  std::stable_sort(sc.link_events.begin(), sc.link_events.end(), by_time);
  std::stable_sort(sc.expectations.begin(), sc.expectations.end(), by_time);
  return sc;
}

}  // namespace housesim
