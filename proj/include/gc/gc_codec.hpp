#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gc/bits.hpp"
#include "gc/error.hpp"
#include "gc/gf2e.hpp"
#include "gc/mds.hpp"

namespace gc {

/*
    Systematic binary code correcting up to delta deletions with list
    decoding.

    Encoding: the k message bits are chunked into m = ceil(k / ell) blocks
    of ell bits (the last block zero-padded on the right), each block read
    as a GF(2^ell) symbol. A systematic (m + c, m) MDS code with c > delta
    parities extends the block symbols; the c*ell serialized parity bits are
    then protected against deletions by repeating each bit delta + 1 times.
    Codeword length: n = k + c * (delta + 1) * ell.

    Decoding a received string y of length n - delta:

      1. The parity bits survive any delta deletions of the repetition
         region: scanning runs right to left, a run of r equal bits still
         holds ceil(r / (delta + 1)) distinct parity bits.

      2. The decoder does not know where the systematic deletions happened,
         so it tries every split of up to delta deletions across the m
         blocks. Under one guess, block i keeps len_i - g_i of its bits and
         every block with g_i >= 1 is treated as an MDS erasure, solved
         from the first e parities (e = number of erased blocks).

      3. A guessed candidate survives only if the remaining parities
         delta..c-1 match and y is a subsequence of its re-encoded
         codeword. Surviving candidates are deduplicated and returned
         sorted by message bits.

    list_decode evaluates guesses incrementally instead of re-slicing y per
    guess: with v[i][s] the symbol of block i when its window is shifted
    left by s positions, suffix sums T[j][s][i] = sum_{i' >= i} v[i'][s] *
    P[i'][j] turn the non-erased portion of any parity into a handful of
    XORs, so one guess costs O(delta^2) field operations plus an e x e
    solve. Candidates are only materialized after the parity checks pass.
    The result is identical to composing enumerate_guesses, decode_guess
    and check_candidate.
*/

struct GcParams {
    unsigned k = 0;      // message length in bits
    unsigned ell = 0;    // block width / field degree, 1..16
    unsigned c = 0;      // MDS parity symbols, must exceed delta
    unsigned delta = 0;  // deletions corrected, >= 1

    unsigned m() const { return (k + ell - 1) / ell; }
    std::size_t n() const { return std::size_t(k) + std::size_t(c) * (delta + 1) * ell; }
    std::size_t parity_bits() const { return std::size_t(c) * ell; }

    // Bits in block i: ell except for a short final block.
    unsigned block_len(unsigned i) const {
        return (i + 1 < m() || k % ell == 0) ? ell : k % ell;
    }

    // Throws std::invalid_argument when any constraint fails:
    // k >= 1, 1 <= ell <= 16, delta >= 1, c > delta, m + c <= 2^ell.
    void validate() const;
};

// One split of the deletion budget: systematic_deletions of the delta
// deletions land in the message region, distributed over blocks by
// per_block (size m, entries summing to systematic_deletions).
struct Guess {
    unsigned systematic_deletions = 0;
    std::vector<unsigned> per_block;
};

struct Candidate {
    Bits message;   // k bits
    Bits codeword;  // n bits, the re-encoding of message
};

using CandidateList = std::vector<Candidate>;

// Number of splits of up to delta deletions over m blocks: C(m + delta, delta).
std::uint64_t guess_count(unsigned m, unsigned delta);

// Emits every guess exactly once: systematic_deletions ascending, and
// per_block in lexicographic order within each level. The Guess reference
// passed to fn reuses one buffer; copy it to keep it.
void for_each_guess(unsigned m, unsigned delta,
                    const std::function<void(const Guess&)>& fn);

// Materialized guess list, in for_each_guess order. Desk scale only.
std::vector<Guess> enumerate_guesses(unsigned m, unsigned delta);

class GcCodec {
public:
    // Validates params; construction builds the field and parity tables.
    explicit GcCodec(GcParams params);

    // mds_ refers into field_, so the object must stay put.
    GcCodec(const GcCodec&) = delete;
    GcCodec& operator=(const GcCodec&) = delete;

    const GcParams& params() const { return params_; }
    const Field& field() const { return field_; }
    const MdsCode& mds() const { return mds_; }

    // message.size() must equal k. Returns the n-bit codeword.
    Bits encode(const Bits& message) const;

    // The m block symbols of a k-bit message.
    std::vector<Symbol> message_symbols(const Bits& message) const;

    // Recovers the c*ell serialized parity bits from a received string
    // missing at most delta bits (|y| in [n - delta, n]). Exact for any
    // such pattern, see step 1 above. Throws DecodeError when fewer than
    // c*ell bits can be recovered, std::invalid_argument on bad lengths.
    Bits recover_parities(const Bits& y) const;

    // Decodes y (length n - delta) under one guess. Returns nothing when
    // the guess is infeasible (some g_i exceeds block i's length). The
    // candidate is not yet checked against the remaining parities.
    std::optional<Candidate> decode_guess(const Bits& y, const Guess& guess,
                                          const Bits& parity_bits) const;

    // True when candidate matches parities delta..c-1 and contains y as a
    // subsequence. Structurally invalid candidates return false.
    bool check_candidate(const Candidate& candidate, const Bits& y,
                         const Bits& parity_bits) const;

    // Full list decode of y (length n - delta, else std::invalid_argument).
    // Returns the deduplicated surviving candidates sorted ascending by
    // message bits. Throws DecodeError when no candidate survives, which
    // cannot happen for a y actually produced by <= delta deletions of a
    // codeword.
    CandidateList list_decode(const Bits& y) const;

private:
    GcParams params_;
    Field field_;
    MdsCode mds_;

    std::vector<Symbol> parse_parity_symbols(const Bits& parity_bits) const;

    friend struct ListDecodeRun;
};

} // namespace gc
