#pragma once

#include <cstddef>
#include <vector>

#include "gc/bits.hpp"
#include "gc/gc_codec.hpp"

namespace gc {
namespace oracle {

/*
    Ground-truth reference decoders, brute force by construction. They
    share no guess or slicing logic with the production decoder, including
    an independent subsequence test, so agreement between the two is
    evidence rather than tautology. Budgets refuse inputs where exhaustion
    stops being exact and fast.
*/

struct OracleBudget {
    unsigned max_k = 10;      // exhaustive_list sweeps 2^k messages
    std::size_t max_n = 24;   // exact_worst_case_list sweeps C(n, delta) patterns
};

// Every codeword of the code that contains y as a subsequence, sorted.
// Any list decoder's output on y must be a subset. Throws
// std::length_error when k exceeds the budget.
std::vector<Bits> exhaustive_list(const Bits& y, const GcCodec& codec,
                                  OracleBudget budget = {});

// All 2^k codewords, indexed by message value (messages read as big-endian
// integers). Shared precomputation for repeated exhaustive_list calls.
std::vector<Bits> build_codebook(const GcCodec& codec, OracleBudget budget = {});

// exhaustive_list against a prebuilt codebook.
std::vector<Bits> exhaustive_list(const Bits& y, const std::vector<Bits>& codebook);

// Exact worst-case list size for message u: the maximum of
// |list_decode(y)| over every deletion pattern of size delta. Throws
// std::length_error when n exceeds the budget.
std::size_t exact_worst_case_list(const Bits& u, const GcCodec& codec,
                                  OracleBudget budget = {});

} // namespace oracle
} // namespace gc
