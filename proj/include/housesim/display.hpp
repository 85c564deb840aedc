#pragma once

#include <array>
#include <string>

namespace housesim {

inline constexpr int kDisplayLines = 4;
inline constexpr int kDisplayCols = 21;  // 128x64 OLED, 6x8 font

// Text model of the OLED. Overlong lines are truncated, never wrapped.
struct DisplayBuffer {
  std::array<std::string, kDisplayLines> lines;

  void set_line(int index, std::string text);

  friend bool operator==(const DisplayBuffer&, const DisplayBuffer&) = default;
};

// 253 -> "25.3", -5 -> "-0.5", 0 -> "0.0"
std::string format_tenths(int tenths);

// ADC counts to whole percent, rounded half away from zero.
int soil_counts_to_pct(int counts);

}  // namespace housesim
