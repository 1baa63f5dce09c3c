#pragma once

#include <cstdint>
#include <vector>

#include "gc/bits.hpp"
#include "gc/rng.hpp"

namespace gc {

// Deletion positions, 1-based, sorted ascending, distinct.
using DeletionPattern = std::vector<std::uint32_t>;

// Removes the bits at the pattern positions. Throws std::invalid_argument
// on unsorted or duplicate positions, std::out_of_range on positions
// outside [1, |x|].
Bits apply_deletions(const Bits& x, const DeletionPattern& pattern);

// Uniform random delta-subset of [1, n] via Floyd's algorithm, returned
// sorted. Throws std::invalid_argument when delta > n.
DeletionPattern sample_pattern(std::size_t n, unsigned delta, SplitMix64& rng);

// All C(n, delta) patterns in lexicographic order.
std::vector<DeletionPattern> enumerate_patterns(std::size_t n, unsigned delta);

// True when needle can be obtained from hay by deleting bits.
bool is_subsequence(const Bits& needle, const Bits& hay);

// The |y| + 2 distinct strings obtained by inserting one bit into y.
// Duplicates are avoided by only inserting a bit value before a position
// that does not already hold it (or at the very end).
std::vector<Bits> single_insertions(const Bits& y);

// All distinct supersequences of y with the given length, sorted. Desk
// scale only: the result has sum_{i<=gap} C(target_len, i) entries.
std::vector<Bits> enumerate_supersequences(const Bits& y, std::size_t target_len);

} // namespace gc
