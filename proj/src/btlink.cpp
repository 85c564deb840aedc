#include "housesim/btlink.hpp"

#include <algorithm>
#include <charconv>

namespace housesim {

namespace {

constexpr std::string_view kCrlf = "\r\n";
constexpr std::string_view kOk = "OK\r\n";
constexpr std::string_view kError = "ERROR:(0)\r\n";

std::string_view strip_line_ending(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_positive_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v <= 0) return std::nullopt;
  return v;
}

}  // namespace

Hc05Module::Hc05Module(std::string own_addr) { cfg_.own_addr = std::move(own_addr); }

std::optional<std::string> Hc05Module::at_command(std::string_view command) {
  if (cfg_.mode != Hc05Mode::AtMode) return std::nullopt;  // payload, not a command
  const std::string_view cmd = strip_line_ending(command);

  if (cmd == "AT") return std::string(kOk);

  if (cmd == "AT+ROLE=0") {
    cfg_.role = Hc05Role::Slave;
    return std::string(kOk);
  }
  if (cmd == "AT+ROLE=1") {
    cfg_.role = Hc05Role::Master;
    return std::string(kOk);
  }
  if (cmd == "AT+ROLE?") {
    return "+ROLE:" + std::to_string(static_cast<int>(cfg_.role)) + "\r\nOK\r\n";
  }

  if (cmd.starts_with("AT+UART=")) {
    std::string_view args = cmd.substr(8);
    // exactly <baud>,0,0
    const auto comma1 = args.find(',');
    if (comma1 == std::string_view::npos) return std::string(kError);
    const auto rest = args.substr(comma1 + 1);
    if (rest != "0,0") return std::string(kError);
    const auto baud = parse_positive_int(args.substr(0, comma1));
    if (!baud) return std::string(kError);
    cfg_.baud = *baud;
    return std::string(kOk);
  }
  if (cmd == "AT+UART?") {
    return "+UART:" + std::to_string(cfg_.baud) + ",0,0\r\nOK\r\n";
  }

  if (cmd.starts_with("AT+BIND=")) {
    std::string_view addr = cmd.substr(8);
    if (addr.empty()) return std::string(kError);
    cfg_.bound_addr = std::string(addr);
    return std::string(kOk);
  }
  if (cmd == "AT+BIND?") {
    return "+BIND:" + cfg_.bound_addr.value_or("0") + "\r\nOK\r\n";
  }

  return std::string(kError);
}

bool ByteChannel::compatible(const Hc05Config& a, const Hc05Config& b) {
  if (a.mode != Hc05Mode::DataMode || b.mode != Hc05Mode::DataMode) return false;
  const bool a_master = a.role == Hc05Role::Master;
  const bool b_master = b.role == Hc05Role::Master;
  if (a_master == b_master) return false;
  if (a.baud != b.baud) return false;
  const Hc05Config& master = a_master ? a : b;
  const Hc05Config& slave = a_master ? b : a;
  return !master.bound_addr || *master.bound_addr == slave.own_addr;
}

void ByteChannel::bind(int baud) {
  baud_ = baud;
  imp_.connected = true;
}

bool try_connect(Hc05Module& a, Hc05Module& b, ByteChannel& channel) {
  if (!ByteChannel::compatible(a.config(), b.config())) return false;
  channel.bind(a.config().baud);
  return true;
}

bool ByteChannel::reconnect(const Hc05Module& a, const Hc05Module& b) {
  if (!compatible(a.config(), b.config())) return false;
  bind(a.config().baud);
  return true;
}

void ByteChannel::disconnect() {
  imp_.connected = false;
  for (DirState& d : dirs_) {
    dropped_ += static_cast<int64_t>(d.in_flight.size());
    d.in_flight.clear();
  }
}

std::size_t ByteChannel::send_bytes(LinkDir dir, std::span<const uint8_t> bytes,
                                    int64_t now_ms) {
  if (!imp_.connected) {
    dropped_ += static_cast<int64_t>(bytes.size());
    return 0;
  }
  DirState& d = dirs_[static_cast<int>(dir)];
  // Time in us*baud units keeps the 1e7/baud us byte time an exact integer.
  const int64_t scale = 1000LL * baud_;          // per millisecond
  const int64_t byte_time = 10'000'000LL;        // 10 bit-times (8N1)
  const int64_t latency = imp_.latency_ms * scale;

  for (const uint8_t byte : bytes) {
    const int64_t start = std::max(now_ms * scale, d.next_free);
    const int64_t end = start + byte_time;
    d.next_free = end;

    if (rng_.next_unit() < imp_.drop_prob) {
      ++dropped_;
      continue;
    }
    uint8_t out = byte;
    if (rng_.next_unit() < imp_.bit_error_prob)
      out = static_cast<uint8_t>(out ^ (1u << rng_.next_bit_index()));

    // Round up to the millisecond grid only here, at delivery.
    int64_t deliver_ms = (end + latency + scale - 1) / scale;
    if (deliver_ms < d.last_sched_ms) deliver_ms = d.last_sched_ms;  // keep FIFO
    d.last_sched_ms = deliver_ms;
    d.in_flight.push_back(Pending{deliver_ms, out});
  }
  return bytes.size();
}

std::vector<uint8_t> ByteChannel::poll_receive(LinkDir dir, int64_t now_ms) {
  DirState& d = dirs_[static_cast<int>(dir)];
  std::vector<uint8_t> out;
  while (!d.in_flight.empty() && d.in_flight.front().deliver_ms <= now_ms) {
    out.push_back(d.in_flight.front().byte);
    if (log_deliveries_) d.delivery_log.push_back(d.in_flight.front().deliver_ms);
    d.in_flight.pop_front();
    ++delivered_;
  }
  return out;
}

}  // namespace housesim
