#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "housesim/rng.hpp"

namespace housesim {

enum class Hc05Role : uint8_t { Slave = 0, Master = 1 };
enum class Hc05Mode : uint8_t { AtMode, DataMode };

struct Hc05Config {
  Hc05Role role = Hc05Role::Slave;
  int baud = 9600;
  std::optional<std::string> bound_addr;  // unset = accept any peer
  std::string own_addr;
  Hc05Mode mode = Hc05Mode::AtMode;
};

// One HC-05 module: AT configuration surface plus role/baud/bind state.
// AT commands are accepted only in AT mode; in data mode the same bytes are
// payload and at_command signals the misuse by returning no response.
class Hc05Module {
 public:
  explicit Hc05Module(std::string own_addr);

  // Grammar: AT, AT+ROLE=<0|1>, AT+ROLE?, AT+UART=<baud>,0,0, AT+UART?,
  // AT+BIND=<addr>, AT+BIND?. Responses are CRLF-terminated; unknown
  // commands answer ERROR:(0).
  std::optional<std::string> at_command(std::string_view command);

  // Mirrors the physical EN-pin procedure; an explicit simulator directive.
  void set_mode(Hc05Mode mode) { cfg_.mode = mode; }

  const Hc05Config& config() const { return cfg_; }
  Hc05Config& config() { return cfg_; }

 private:
  Hc05Config cfg_;
};

struct LinkImpairments {
  int64_t latency_ms = 0;
  double drop_prob = 0.0;       // per byte
  double bit_error_prob = 0.0;  // per byte
  bool connected = false;
};

enum class LinkDir : int { AToB = 0, BToA = 1 };

// Baud-limited, impaired, FIFO byte pipe between two paired modules.
// All operations take an explicit now_ms; there is no internal clock.
// Byte wire time is kept in exact rational microseconds (1e7/baud us per
// byte) and rounded up to the 1 ms grid only at delivery.
class ByteChannel {
 public:
  explicit ByteChannel(uint64_t seed) : rng_(seed) {}

  // Pairing succeeds iff exactly one module is master, bauds match, and the
  // master's bound address is unset or equals the slave's own address.
  // Binds the channel to the agreed baud and marks it connected.
  friend bool try_connect(Hc05Module& a, Hc05Module& b, ByteChannel& channel);

  // Re-checks the same pairing rules; used by scenario `link connect`.
  bool reconnect(const Hc05Module& a, const Hc05Module& b);

  // Drops any in-flight bytes.
  void disconnect();

  // Schedules bytes onto the wire. While disconnected every byte is
  // discarded (counted in dropped_bytes) and 0 is returned.
  std::size_t send_bytes(LinkDir dir, std::span<const uint8_t> bytes, int64_t now_ms);

  // All bytes with delivery timestamp <= now_ms, in send order.
  std::vector<uint8_t> poll_receive(LinkDir dir, int64_t now_ms);

  LinkImpairments& impairments() { return imp_; }
  const LinkImpairments& impairments() const { return imp_; }
  bool connected() const { return imp_.connected; }
  int baud() const { return baud_; }

  int64_t delivered_bytes() const { return delivered_; }
  int64_t dropped_bytes() const { return dropped_; }

  // Optional delivery-time recording for throughput audits.
  void enable_delivery_log() { log_deliveries_ = true; }
  const std::vector<int64_t>& delivery_log(LinkDir dir) const {
    return dirs_[static_cast<int>(dir)].delivery_log;
  }

 private:
  struct Pending {
    int64_t deliver_ms;
    uint8_t byte;
  };
  struct DirState {
    std::deque<Pending> in_flight;
    // Units of us*baud so byte completion times stay exact integers.
    int64_t next_free = 0;
    int64_t last_sched_ms = 0;  // FIFO guard when latency shrinks mid-run
    std::vector<int64_t> delivery_log;
  };

  static bool compatible(const Hc05Config& a, const Hc05Config& b);
  void bind(int baud);

  int baud_ = 9600;
  LinkImpairments imp_;
  SplitMix64 rng_;
  DirState dirs_[2];
  int64_t delivered_ = 0;
  int64_t dropped_ = 0;
  bool log_deliveries_ = false;
};

bool try_connect(Hc05Module& a, Hc05Module& b, ByteChannel& channel);

}  // namespace housesim
