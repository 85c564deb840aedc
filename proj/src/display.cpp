#include "housesim/display.hpp"

#include <cstdlib>

namespace housesim {

void DisplayBuffer::set_line(int index, std::string text) {
  if (text.size() > kDisplayCols) text.resize(kDisplayCols);
  lines[static_cast<std::size_t>(index)] = std::move(text);
}

std::string format_tenths(int tenths) {
  const int a = std::abs(tenths);
  std::string s = tenths < 0 ? "-" : "";
  s += std::to_string(a / 10);
  s += '.';
  s += static_cast<char>('0' + a % 10);
  return s;
}

int soil_counts_to_pct(int counts) {
  // round(counts * 100 / 4095), half away from zero; counts is never negative
  return static_cast<int>((200LL * counts + 4095) / 8190);
}

}  // namespace housesim
