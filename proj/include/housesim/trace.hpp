#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace housesim {

using TraceKv = std::pair<std::string_view, std::string>;

// Emits `t=<ms> <ACTOR> <EVENT> <key=value ...>` lines, keys in the order
// given by the caller. Lines are byte-identical across runs with equal seed
// and inputs. A null sink disables output.
class TraceWriter {
 public:
  TraceWriter() = default;
  explicit TraceWriter(std::ostream* out) : out_(out) {}

  bool enabled() const { return out_ != nullptr; }

  void event(int64_t t_ms, std::string_view actor, std::string_view name,
             std::span<const TraceKv> kv);
  void event(int64_t t_ms, std::string_view actor, std::string_view name,
             std::initializer_list<TraceKv> kv = {});

 private:
  std::ostream* out_ = nullptr;
};

}  // namespace housesim
