#pragma once

#include <cstdint>

namespace gc {

// C(n, k) computed exactly in 64 bits. Callers stay within desk-scale
// ranges; overflow throws std::overflow_error.
std::uint64_t binomial(unsigned n, unsigned k);

} // namespace gc
