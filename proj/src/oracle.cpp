#include "gc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "gc/deletion_channel.hpp"

namespace gc {
namespace oracle {

namespace {

// Deliberately not the production subsequence routine: walks the haystack
// with std::find per needle bit.
bool contains_subsequence(const Bits& hay, const Bits& needle) {
    auto it = hay.begin();
    for (std::uint8_t b : needle) {
        it = std::find(it, hay.end(), b);
        if (it == hay.end()) return false;
        ++it;
    }
    return true;
}

Bits message_from_index(std::uint64_t index, unsigned k) {
    Bits out(k);
    for (unsigned i = 0; i < k; ++i) {
        out[i] = static_cast<std::uint8_t>((index >> (k - 1 - i)) & 1u);
    }
    return out;
}

} // namespace

std::vector<Bits> build_codebook(const GcCodec& codec, OracleBudget budget) {
    const unsigned k = codec.params().k;
    if (k > budget.max_k) {
        throw std::length_error("message space too large for exhaustive sweep");
    }
    std::vector<Bits> book;
    book.reserve(std::size_t(1) << k);
    for (std::uint64_t u = 0; u < (std::uint64_t(1) << k); ++u) {
        book.push_back(codec.encode(message_from_index(u, k)));
    }
    return book;
}

std::vector<Bits> exhaustive_list(const Bits& y, const std::vector<Bits>& codebook) {
    std::vector<Bits> out;
    for (const Bits& codeword : codebook) {
        if (contains_subsequence(codeword, y)) {
            out.push_back(codeword);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bits> exhaustive_list(const Bits& y, const GcCodec& codec, OracleBudget budget) {
    return exhaustive_list(y, build_codebook(codec, budget));
}

std::size_t exact_worst_case_list(const Bits& u, const GcCodec& codec, OracleBudget budget) {
    const auto& p = codec.params();
    if (p.n() > budget.max_n) {
        throw std::length_error("codeword too long for exhaustive pattern sweep");
    }
    Bits x = codec.encode(u);
    std::size_t worst = 0;
    for (const DeletionPattern& pattern : enumerate_patterns(x.size(), p.delta)) {
        Bits y = apply_deletions(x, pattern);
        worst = std::max(worst, codec.list_decode(y).size());
    }
    return worst;
}

} // namespace oracle
} // namespace gc
