#include "gc/bits.hpp"

#include <stdexcept>

namespace gc {

Bits bits_from_string(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
        out.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return out;
}

std::string to_string(const Bits& bits) {
    std::string out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

} // namespace gc
