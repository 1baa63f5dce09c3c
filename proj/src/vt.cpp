#include "gc/vt.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "gc/deletion_channel.hpp"

namespace gc {
namespace vt {

namespace {

std::uint64_t weighted_sum(const Bits& x) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) s += i + 1;
    }
    return s;
}

void check_params(VtParams p) {
    if (p.n < 1) {
        throw std::invalid_argument("codeword length must be at least 1");
    }
    if (p.a > p.n) {
        throw std::invalid_argument("syndrome residue must be in [0, n]");
    }
}

} // namespace

unsigned redundancy(unsigned n) {
    // ceil(log2(n + 1)) = bit_width(n).
    return std::bit_width(n);
}

unsigned message_length(unsigned n) {
    return n - redundancy(n);
}

VtParams params_for_message_length(unsigned k, unsigned a) {
    for (unsigned n = k + 1;; ++n) {
        if (message_length(n) == k) {
            VtParams p{n, a};
            check_params(p);
            return p;
        }
    }
}

unsigned syndrome(const Bits& x) {
    return static_cast<unsigned>(weighted_sum(x) % (x.size() + 1));
}

Bits encode_systematic(const Bits& message, VtParams p) {
    check_params(p);
    const unsigned t = redundancy(p.n);
    if (message.size() != message_length(p.n)) {
        throw std::invalid_argument("message length mismatch");
    }

    Bits x(p.n, 0);
    std::uint64_t base = 0;
    std::size_t next = 0;
    for (unsigned pos = 1; pos <= p.n; ++pos) {
        if (std::has_single_bit(pos)) continue;  // reserved for redundancy
        x[pos - 1] = message[next++];
        if (x[pos - 1]) base += pos;
    }

    // The redundancy positions 1, 2, 4, ... contribute exactly their own
    // value, so writing the binary representation of the residue gap
    // lands the syndrome on a. The gap fits: it is < n + 1 <= 2^t.
    std::uint64_t r = (std::uint64_t(p.a) + (p.n + 1) - base % (p.n + 1)) % (p.n + 1);
    for (unsigned j = 0; j < t; ++j) {
        if ((r >> j) & 1u) {
            x[(1u << j) - 1] = 1;
        }
    }
    return x;
}

Bits decode_single_deletion(const Bits& y, VtParams p) {
    check_params(p);
    if (y.size() + 1 != p.n) {
        throw std::invalid_argument("received length must be n - 1");
    }

    const std::uint64_t mod = p.n + 1;
    std::uint64_t s = weighted_sum(y) % mod;
    std::uint64_t gap = (p.a + mod - s) % mod;
    std::uint64_t weight = static_cast<std::uint64_t>(
        std::count(y.begin(), y.end(), std::uint8_t(1)));

    Bits x;
    x.reserve(p.n);
    if (gap <= weight) {
        // A deleted 0 shifts the syndrome by the number of 1s to its
        // right: reinsert it just left of the rightmost gap ones.
        std::size_t j = y.size();
        std::uint64_t ones = 0;
        while (ones < gap) {
            --j;
            ones += y[j];
        }
        x.assign(y.begin(), y.begin() + j);
        x.push_back(0);
        x.insert(x.end(), y.begin() + j, y.end());
    } else {
        // A deleted 1 shifts the syndrome by its own position plus the 1s
        // to its right: reinsert it just right of the leftmost
        // gap - weight - 1 zeros.
        std::uint64_t zeros_needed = gap - weight - 1;
        std::size_t j = 0;
        std::uint64_t zeros = 0;
        while (zeros < zeros_needed) {
            zeros += (y[j] == 0);
            ++j;
        }
        x.assign(y.begin(), y.begin() + j);
        x.push_back(1);
        x.insert(x.end(), y.begin() + j, y.end());
    }

    if (syndrome(x) != p.a) {
        throw DecodeError("reinsertion missed the target syndrome");
    }
    return x;
}

std::vector<Bits> list_decode_multi(const Bits& y, unsigned delta, VtParams p) {
    check_params(p);
    if (delta < 1) {
        throw std::invalid_argument("deletion count must be at least 1");
    }
    if (y.size() + delta != p.n) {
        throw std::invalid_argument("received length must be n - delta");
    }

    // Stretch y to length n - 1 in every possible way, finish each with
    // the single-deletion decoder, keep the distinct valid outputs.
    std::vector<Bits> stretched;
    if (delta == 1) {
        stretched.push_back(y);
    } else if (delta == 2) {
        stretched = single_insertions(y);
    } else {
        stretched = enumerate_supersequences(y, p.n - 1);
    }

    std::vector<Bits> out;
    std::unordered_set<std::string> seen;
    for (const Bits& s : stretched) {
        Bits x = decode_single_deletion(s, p);
        if (syndrome(x) != p.a) continue;
        if (!is_subsequence(y, x)) continue;
        std::string key(reinterpret_cast<const char*>(x.data()), x.size());
        if (seen.insert(std::move(key)).second) {
            out.push_back(std::move(x));
        }
    }
    if (out.empty()) {
        throw DecodeError("no codeword is consistent with the received string");
    }
    return out;
}

} // namespace vt
} // namespace gc
