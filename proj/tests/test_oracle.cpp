#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "gc/deletion_channel.hpp"
#include "gc/gc_codec.hpp"
#include "gc/oracle.hpp"
#include "gc/rng.hpp"

using gc::Bits;
using gc::GcCodec;
using gc::GcParams;
using gc::SplitMix64;

namespace {

Bits nth_message(std::uint64_t value, unsigned k) {
    Bits out(k);
    for (unsigned i = 0; i < k; ++i) out[i] = (value >> (k - 1 - i)) & 1;
    return out;
}

} // namespace

TEST_CASE("codebook enumerates every message in index order") {
    GcCodec codec(GcParams{8, 4, 2, 1});
    auto codebook = gc::oracle::build_codebook(codec);
    REQUIRE(codebook.size() == 256);
    for (std::uint64_t u = 0; u < 256; ++u) {
        REQUIRE(codebook[u] == codec.encode(nth_message(u, 8)));
    }
}

TEST_CASE("exhaustive_list equals a direct filter of the codebook") {
    GcCodec codec(GcParams{8, 4, 2, 1});
    auto codebook = gc::oracle::build_codebook(codec);
    SplitMix64 rng(31);
    for (int round = 0; round < 400; ++round) {
        // Half the probes are real channel outputs, half arbitrary strings.
        Bits y;
        if (round % 2 == 0) {
            Bits x = codebook[rng.below(256)];
            y = gc::apply_deletions(x, gc::sample_pattern(x.size(), 1, rng));
        } else {
            y = gc::random_bits(rng, 23);
        }

        // The check filter leans on the channel's subsequence test, which
        // the oracle does not use.
        std::vector<Bits> expect;
        for (const Bits& x : codebook) {
            if (gc::is_subsequence(y, x)) expect.push_back(x);
        }
        std::sort(expect.begin(), expect.end());

        REQUIRE(gc::oracle::exhaustive_list(y, codebook) == expect);
        REQUIRE(gc::oracle::exhaustive_list(y, codec) == expect);
    }
}

TEST_CASE("exhaustive_list contains the transmitted codeword") {
    GcCodec codec(GcParams{10, 5, 2, 1});
    SplitMix64 rng(7);
    for (int round = 0; round < 200; ++round) {
        Bits message = gc::random_bits(rng, 10);
        Bits x = codec.encode(message);
        Bits y = gc::apply_deletions(x, gc::sample_pattern(x.size(), 1, rng));
        auto list = gc::oracle::exhaustive_list(y, codec);
        REQUIRE(std::binary_search(list.begin(), list.end(), x));
    }
}

TEST_CASE("production lists are subsets of the oracle's") {
    GcCodec codec(GcParams{8, 4, 3, 2});
    auto codebook = gc::oracle::build_codebook(codec);
    SplitMix64 rng(1001);
    for (int round = 0; round < 300; ++round) {
        Bits message = gc::random_bits(rng, 8);
        Bits x = codec.encode(message);
        Bits y = gc::apply_deletions(x, gc::sample_pattern(x.size(), 2, rng));
        auto truth = gc::oracle::exhaustive_list(y, codebook);
        for (const auto& cand : codec.list_decode(y)) {
            REQUIRE(std::binary_search(truth.begin(), truth.end(), cand.codeword));
        }
    }
}

TEST_CASE("budgets refuse oversized sweeps") {
    GcCodec big(GcParams{11, 4, 2, 1});
    CHECK_THROWS_AS(gc::oracle::build_codebook(big), std::length_error);
    CHECK_THROWS_AS(gc::oracle::exhaustive_list(Bits(big.params().n() - 1, 0), big),
                    std::length_error);
    CHECK_NOTHROW(gc::oracle::build_codebook(big, gc::oracle::OracleBudget{11, 24}));

    GcCodec wide(GcParams{4, 3, 2, 1});  // n = 4 + 2*2*3 = 16 <= 24 fine
    CHECK_NOTHROW(gc::oracle::exact_worst_case_list(Bits(4, 0), wide));
    GcCodec wider(GcParams{8, 4, 2, 1});  // n = 24 <= 24 fine
    CHECK_NOTHROW(gc::oracle::exact_worst_case_list(Bits(8, 0), wider));
    GcCodec over(GcParams{9, 4, 2, 1});  // n = 25
    CHECK_THROWS_AS(gc::oracle::exact_worst_case_list(Bits(9, 0), over),
                    std::length_error);
}

TEST_CASE("worst case over one deletion of the all-zero word") {
    // Deleting any bit of the all-zero codeword gives the same received
    // string, so the worst case equals that single list size.
    GcCodec codec(GcParams{8, 4, 2, 1});
    Bits zeros(8, 0);
    std::size_t direct = codec.list_decode(Bits(codec.params().n() - 1, 0)).size();
    CHECK(gc::oracle::exact_worst_case_list(zeros, codec) == direct);
    CHECK(direct >= 1);
}

TEST_CASE("worst case agrees with a spelled-out pattern sweep") {
    GcCodec one(GcParams{6, 3, 3, 1});  // n = 24
    GcCodec two(GcParams{2, 2, 3, 2});  // n = 20
    SplitMix64 rng(55);
    for (int round = 0; round < 6; ++round) {
        Bits message = gc::random_bits(rng, 6);
        Bits x = one.encode(message);
        std::size_t expect = 0;
        for (const auto& pattern : gc::enumerate_patterns(x.size(), 1)) {
            expect = std::max(expect,
                              one.list_decode(gc::apply_deletions(x, pattern)).size());
        }
        REQUIRE(gc::oracle::exact_worst_case_list(message, one) == expect);
    }
    for (std::uint64_t u = 0; u < 4; ++u) {
        Bits message = nth_message(u, 2);
        Bits x = two.encode(message);
        std::size_t expect = 0;
        for (const auto& pattern : gc::enumerate_patterns(x.size(), 2)) {
            expect = std::max(expect,
                              two.list_decode(gc::apply_deletions(x, pattern)).size());
        }
        REQUIRE(gc::oracle::exact_worst_case_list(message, two) == expect);
    }
}

TEST_CASE("oracle calls are deterministic") {
    GcCodec codec(GcParams{8, 4, 2, 1});
    Bits y(codec.params().n() - 1, 0);
    CHECK(gc::oracle::exhaustive_list(y, codec) == gc::oracle::exhaustive_list(y, codec));
    Bits message = nth_message(0xB2, 8);
    CHECK(gc::oracle::exact_worst_case_list(message, codec) ==
          gc::oracle::exact_worst_case_list(message, codec));
}
