#pragma once

#include <array>

namespace housesim {

// Wiring metadata carried in traces. Drives no behavior.
struct PinAssignment {
  const char* name;
  const char* pin;
};

inline constexpr std::array<PinAssignment, 9> kGreenPinMap = {{
    {"oled_scl", "PB6"},
    {"oled_sda", "PB7"},
    {"dht_data", "PB9"},
    {"ultrasonic_trig", "PA11"},
    {"ultrasonic_echo", "PA8"},
    {"soil_adc", "PB1"},
    {"rain_d0", "PA0"},
    {"hc05_rx", "PA9"},
    {"hc05_tx", "PA10"},
}};

inline constexpr std::array<PinAssignment, 8> kRedPinMap = {{
    {"oled_scl", "PB6"},
    {"oled_sda", "PB7"},
    {"led1", "PB1"},
    {"led2", "PA7"},
    {"led3", "PA0"},
    {"buzzer", "PA4"},
    {"hc05_rx", "PA9"},
    {"hc05_tx", "PA10"},
}};

}  // namespace housesim
