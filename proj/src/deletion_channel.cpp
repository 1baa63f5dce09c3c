#include "gc/deletion_channel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gc {

Bits apply_deletions(const Bits& x, const DeletionPattern& pattern) {
    for (std::size_t t = 0; t < pattern.size(); ++t) {
        if (pattern[t] < 1 || pattern[t] > x.size()) {
            throw std::out_of_range("deletion position outside the string");
        }
        if (t > 0 && pattern[t] <= pattern[t - 1]) {
            throw std::invalid_argument("deletion positions must be sorted and distinct");
        }
    }
    Bits out;
    out.reserve(x.size() - pattern.size());
    std::size_t t = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (t < pattern.size() && pattern[t] == i + 1) {
            ++t;
            continue;
        }
        out.push_back(x[i]);
    }
    return out;
}

DeletionPattern sample_pattern(std::size_t n, unsigned delta, SplitMix64& rng) {
    if (delta > n) {
        throw std::invalid_argument("cannot delete more bits than the string holds");
    }
    // Floyd's subset sampling: each delta-subset of [1, n] equally likely.
    DeletionPattern out;
    out.reserve(delta);
    for (std::size_t j = n - delta + 1; j <= n; ++j) {
        std::uint32_t t = static_cast<std::uint32_t>(1 + rng.below(j));
        if (std::find(out.begin(), out.end(), t) != out.end()) {
            out.push_back(static_cast<std::uint32_t>(j));
        } else {
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DeletionPattern> enumerate_patterns(std::size_t n, unsigned delta) {
    if (delta > n) {
        throw std::invalid_argument("cannot delete more bits than the string holds");
    }
    std::vector<DeletionPattern> out;
    DeletionPattern cur(delta);
    for (unsigned i = 0; i < delta; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        if (delta == 0) break;
        // Advance the rightmost position that still has room.
        unsigned i = delta;
        while (i > 0 && cur[i - 1] == n - delta + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (unsigned j = i; j < delta; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

bool is_subsequence(const Bits& needle, const Bits& hay) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < hay.size() && i < needle.size(); ++j) {
        if (hay[j] == needle[i]) ++i;
    }
    return i == needle.size();
}

std::vector<Bits> single_insertions(const Bits& y) {
    std::vector<Bits> out;
    out.reserve(y.size() + 2);
    Bits buf(y.size() + 1);
    for (std::uint8_t b = 0; b <= 1; ++b) {
        for (std::size_t j = 0; j <= y.size(); ++j) {
            // Inserting b before position j and before j+1 collide when
            // y[j] == b; keeping only the j with y[j] != b (or the end)
            // emits every distinct result exactly once.
            if (j < y.size() && y[j] == b) continue;
            std::copy(y.begin(), y.begin() + j, buf.begin());
            buf[j] = b;
            std::copy(y.begin() + j, y.end(), buf.begin() + j + 1);
            out.push_back(buf);
        }
    }
    return out;
}

std::vector<Bits> enumerate_supersequences(const Bits& y, std::size_t target_len) {
    if (target_len < y.size()) {
        throw std::invalid_argument("supersequences cannot be shorter than the string");
    }
    std::set<Bits> level{y};
    for (std::size_t len = y.size(); len < target_len; ++len) {
        std::set<Bits> next;
        for (const Bits& s : level) {
            for (Bits& t : single_insertions(s)) {
                next.insert(std::move(t));
            }
        }
        level = std::move(next);
    }
    return std::vector<Bits>(level.begin(), level.end());
}

} // namespace gc
