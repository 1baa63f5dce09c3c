#include "gc/combinatorics.hpp"

#include <stdexcept>

namespace gc {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // acc * (n - k + i) is divisible by i: acc holds C(n-k+i-1, i-1).
        std::uint64_t factor = n - k + i;
        if (acc > ~std::uint64_t(0) / factor) {
            throw std::overflow_error("binomial overflows 64 bits");
        }
        acc = acc * factor / i;
    }
    return acc;
}

} // namespace gc
