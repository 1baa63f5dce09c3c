#pragma once

#include <vector>

#include "gc/bits.hpp"
#include "gc/error.hpp"

namespace gc {
namespace vt {

/*
    Varshamov-Tenengolts codes: the length-n binary strings x with

        sum_{i=1..n} i * x_i  ==  a   (mod n + 1).

    Each residue class corrects one deletion. Systematic encoding places
    message bits at the non-power-of-two positions and tunes the t =
    ceil(log2(n + 1)) bits at positions 1, 2, 4, ... to hit the residue.

    Multiple deletions are handled by a list decoder: extend the received
    string to every supersequence one bit short of full length, run the
    single-deletion decoder on each, and keep the distinct outputs in the
    code. The list grows roughly linearly in n per extra deletion, in
    contrast to a code built to correct delta deletions directly.
*/

struct VtParams {
    unsigned n = 0;  // codeword length, >= 1
    unsigned a = 0;  // syndrome residue, 0 <= a <= n
};

// ceil(log2(n + 1)): the number of positions reserved for redundancy.
unsigned redundancy(unsigned n);

// n minus redundancy(n).
unsigned message_length(unsigned n);

// Smallest n carrying exactly k message bits.
VtParams params_for_message_length(unsigned k, unsigned a = 0);

// sum i * x_i mod (|x| + 1).
unsigned syndrome(const Bits& x);

// message.size() must equal message_length(p.n). Returns the codeword.
Bits encode_systematic(const Bits& message, VtParams p);

// Reinserts the one deleted bit: |y| must be p.n - 1. Every such y has
// exactly one length-n supersequence per syndrome residue, so this always
// produces the unique codeword of residue p.a containing y. When y came
// from a different residue class the output is a valid residue-p.a string
// that differs from the transmitted one.
Bits decode_single_deletion(const Bits& y, VtParams p);

// List decode after delta deletions (|y| must be p.n - delta): applies the
// single-deletion decoder to every supersequence of y of length n - 1 and
// collects the distinct outputs with syndrome p.a containing y. Returned
// in first-found order, deterministic for fixed input.
std::vector<Bits> list_decode_multi(const Bits& y, unsigned delta, VtParams p);

} // namespace vt
} // namespace gc
