#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gc/combinatorics.hpp"
#include "gc/deletion_channel.hpp"
#include "gc/vt.hpp"

using gc::Bits;
namespace vt = gc::vt;

namespace {

Bits B(const char* s) { return gc::bits_from_string(s); }

Bits nth_message(std::uint64_t value, unsigned k) {
    Bits out(k);
    for (unsigned i = 0; i < k; ++i) out[i] = (value >> (k - 1 - i)) & 1;
    return out;
}

bool is_power_of_two(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

// Message bits read back out of a codeword, independent of the encoder.
Bits extract_message(const Bits& x) {
    Bits out;
    for (unsigned pos = 1; pos <= x.size(); ++pos) {
        if (!is_power_of_two(pos)) out.push_back(x[pos - 1]);
    }
    return out;
}

} // namespace

TEST_CASE("redundancy and message length") {
    CHECK(vt::redundancy(1) == 1);
    CHECK(vt::redundancy(2) == 2);
    CHECK(vt::redundancy(3) == 2);
    CHECK(vt::redundancy(4) == 3);
    CHECK(vt::redundancy(7) == 3);
    CHECK(vt::redundancy(8) == 4);
    CHECK(vt::redundancy(12) == 4);
    CHECK(vt::redundancy(15) == 4);
    CHECK(vt::redundancy(16) == 5);
    CHECK(vt::message_length(12) == 8);
    CHECK(vt::message_length(16) == 11);

    // Redundancy counts exactly the power-of-two positions.
    for (unsigned n = 1; n <= 40; ++n) {
        unsigned powers = 0;
        for (unsigned pos = 1; pos <= n; ++pos) powers += is_power_of_two(pos);
        REQUIRE(vt::redundancy(n) == powers);
        REQUIRE(vt::message_length(n) == n - powers);
    }
}

TEST_CASE("params_for_message_length picks the smallest fitting n") {
    for (unsigned k = 1; k <= 60; ++k) {
        vt::VtParams p = vt::params_for_message_length(k, 0);
        REQUIRE(vt::message_length(p.n) == k);
        if (p.n > 1) REQUIRE(vt::message_length(p.n - 1) < k);
    }
    CHECK(vt::params_for_message_length(8).n == 12);
    CHECK(vt::params_for_message_length(11).n == 15);
}

TEST_CASE("syndrome examples") {
    CHECK(vt::syndrome(B("0000")) == 0);
    CHECK(vt::syndrome(B("1011")) == 3);   // 1 + 3 + 4 = 8 mod 5
    CHECK(vt::syndrome(B("1")) == 1);
    CHECK(vt::syndrome(B("01")) == 2);
    CHECK(vt::syndrome(Bits{}) == 0);
}

TEST_CASE("systematic encoding hits the residue and embeds the message") {
    for (unsigned n = 2; n <= 12; ++n) {
        unsigned k = vt::message_length(n);
        for (unsigned a : {0u, std::min(3u, n)}) {
            vt::VtParams p{n, a};
            for (std::uint64_t u = 0; u < (std::uint64_t(1) << k); ++u) {
                Bits message = nth_message(u, k);
                Bits x = vt::encode_systematic(message, p);
                REQUIRE(x.size() == n);
                REQUIRE(vt::syndrome(x) == a);
                REQUIRE(extract_message(x) == message);
            }
        }
    }
    CHECK_THROWS_AS(vt::encode_systematic(B("101"), vt::VtParams{12, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(vt::encode_systematic(B(""), vt::VtParams{4, 5}),
                    std::invalid_argument);
}

TEST_CASE("single-deletion decoding round trips exhaustively") {
    for (unsigned n = 2; n <= 12; ++n) {
        unsigned k = vt::message_length(n);
        for (unsigned a : {0u, std::min(3u, n)}) {
            vt::VtParams p{n, a};
            for (std::uint64_t u = 0; u < (std::uint64_t(1) << k); ++u) {
                Bits x = vt::encode_systematic(nth_message(u, k), p);
                for (std::uint32_t pos = 1; pos <= n; ++pos) {
                    Bits y = gc::apply_deletions(x, {pos});
                    REQUIRE(vt::decode_single_deletion(y, p) == x);
                }
            }
        }
    }
}

TEST_CASE("single-deletion decoding is the unique residue supersequence") {
    // For every y of length n - 1 and every residue a, exactly one length-n
    // supersequence has syndrome a, and the decoder finds it.
    for (unsigned n : {4u, 7u, 10u}) {
        for (std::uint64_t u = 0; u < (std::uint64_t(1) << (n - 1)); ++u) {
            Bits y = nth_message(u, n - 1);
            auto supers = gc::enumerate_supersequences(y, n);
            for (unsigned a = 0; a <= n; ++a) {
                std::vector<Bits> in_class;
                for (const Bits& s : supers) {
                    if (vt::syndrome(s) == a) in_class.push_back(s);
                }
                REQUIRE(in_class.size() == 1);
                REQUIRE(vt::decode_single_deletion(y, vt::VtParams{n, a}) == in_class[0]);
            }
        }
    }
}

TEST_CASE("decoding against a foreign residue yields that residue, not the input") {
    vt::VtParams sent{10, 0};
    Bits x = vt::encode_systematic(B("101101"), sent);
    Bits y = gc::apply_deletions(x, {4});
    Bits z = vt::decode_single_deletion(y, vt::VtParams{10, 4});
    CHECK(z.size() == 10);
    CHECK(vt::syndrome(z) == 4);
    CHECK(gc::is_subsequence(y, z));
    CHECK(z != x);
}

TEST_CASE("decode_single_deletion validates the received length") {
    vt::VtParams p{10, 0};
    CHECK_THROWS_AS(vt::decode_single_deletion(Bits(10, 0), p), std::invalid_argument);
    CHECK_THROWS_AS(vt::decode_single_deletion(Bits(8, 0), p), std::invalid_argument);
}

TEST_CASE("multi-deletion list decoding, delta = 1 matches the single decoder") {
    vt::VtParams p{12, 0};
    Bits x = vt::encode_systematic(B("10110100"), p);
    for (std::uint32_t pos = 1; pos <= 12; ++pos) {
        Bits y = gc::apply_deletions(x, {pos});
        auto list = vt::list_decode_multi(y, 1, p);
        REQUIRE(list.size() == 1);
        REQUIRE(list[0] == vt::decode_single_deletion(y, p));
    }
}

TEST_CASE("multi-deletion list decoding membership, exhaustive delta = 2") {
    for (unsigned n : {8u, 11u, 14u}) {
        unsigned k = vt::message_length(n);
        vt::VtParams p{n, 0};
        for (std::uint64_t u = 0; u < (std::uint64_t(1) << k); ++u) {
            Bits x = vt::encode_systematic(nth_message(u, k), p);
            for (const auto& pattern : gc::enumerate_patterns(n, 2)) {
                Bits y = gc::apply_deletions(x, pattern);
                auto list = vt::list_decode_multi(y, 2, p);
                bool hit = false;
                std::set<Bits> distinct;
                for (const Bits& cand : list) {
                    REQUIRE(cand.size() == n);
                    REQUIRE(vt::syndrome(cand) == 0);
                    REQUIRE(gc::is_subsequence(y, cand));
                    REQUIRE(distinct.insert(cand).second);
                    hit |= cand == x;
                }
                REQUIRE(hit);
                // One stretched string per single insertion, so the list
                // cannot exceed |y| + 2.
                REQUIRE(list.size() <= y.size() + 2);
            }
        }
    }
}

TEST_CASE("multi-deletion list decoding membership, delta = 3 spot checks") {
    unsigned n = 14;
    vt::VtParams p{n, 0};
    Bits x = vt::encode_systematic(B("1001101110"), p);
    for (const auto& pattern : gc::enumerate_patterns(n, 3)) {
        Bits y = gc::apply_deletions(x, pattern);
        auto list = vt::list_decode_multi(y, 3, p);
        bool hit = false;
        for (const Bits& cand : list) hit |= cand == x;
        REQUIRE(hit);
    }
}

TEST_CASE("list_decode_multi is deterministic, order included") {
    vt::VtParams p{14, 0};
    Bits x = vt::encode_systematic(B("1011010011"), p);
    Bits y = gc::apply_deletions(x, {3, 9});
    auto a = vt::list_decode_multi(y, 2, p);
    auto b = vt::list_decode_multi(y, 2, p);
    CHECK(a == b);
    CHECK_THROWS_AS(vt::list_decode_multi(Bits(10, 0), 2, p), std::invalid_argument);
}
