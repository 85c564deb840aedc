#include "housesim/trace.hpp"

namespace housesim {

void TraceWriter::event(int64_t t_ms, std::string_view actor, std::string_view name,
                        std::span<const TraceKv> kv) {
  if (!out_) return;
  std::ostream& o = *out_;
  o << "t=" << t_ms << ' ' << actor << ' ' << name;
  for (const auto& [key, value] : kv) o << ' ' << key << '=' << value;
  o << '\n';
}

void TraceWriter::event(int64_t t_ms, std::string_view actor, std::string_view name,
                        std::initializer_list<TraceKv> kv) {
  event(t_ms, actor, name, std::span<const TraceKv>(kv.begin(), kv.size()));
}

}  // namespace housesim
