#pragma once

#include <stdexcept>

namespace gc {

// Raised when a received string cannot be matched to any codeword, or when
// redundancy recovery fails. Distinct from std::invalid_argument, which
// signals a caller error (bad lengths, bad parameters).
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gc
