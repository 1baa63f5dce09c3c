#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gc {

// Binary string, one bit per byte, each value 0 or 1.
using Bits = std::vector<std::uint8_t>;

// Parses a line of '0'/'1' characters. Throws std::invalid_argument on
// anything else.
Bits bits_from_string(std::string_view text);

std::string to_string(const Bits& bits);

} // namespace gc
