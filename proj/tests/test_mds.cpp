#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gc/gf2e.hpp"
#include "gc/mds.hpp"
#include "gc/rng.hpp"

using gc::Field;
using gc::MdsCode;
using gc::SplitMix64;
using gc::Symbol;

namespace {

// Reference parity computation straight from the Cauchy definition, using
// only Field::inv/mul on freshly derived coefficients.
std::vector<Symbol> oracle_parities(const Field& f, unsigned m, unsigned c,
                                    const std::vector<Symbol>& data) {
    std::vector<Symbol> out(c, 0);
    for (unsigned j = 0; j < c; ++j) {
        for (unsigned i = 0; i < m; ++i) {
            Symbol coeff = f.inv(Symbol(i ^ (m + j)));
            out[j] = f.add(out[j], f.mul(data[i], coeff));
        }
    }
    return out;
}

// Rank of a square GF(2^ell) matrix by elimination.
bool invertible(const Field& f, std::vector<Symbol> mat, unsigned n) {
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && mat[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return false;
        for (unsigned x = 0; x < n; ++x) std::swap(mat[pivot * n + x], mat[col * n + x]);
        Symbol scale = f.inv(mat[col * n + col]);
        for (unsigned x = 0; x < n; ++x) mat[col * n + x] = f.mul(mat[col * n + x], scale);
        for (unsigned row = 0; row < n; ++row) {
            if (row == col || mat[row * n + col] == 0) continue;
            Symbol factor = mat[row * n + col];
            for (unsigned x = 0; x < n; ++x) {
                mat[row * n + x] ^= f.mul(factor, mat[col * n + x]);
            }
        }
    }
    return true;
}

// All size-count subsets of [0, total).
std::vector<std::vector<unsigned>> subsets(unsigned total, unsigned count) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(count);
    for (unsigned i = 0; i < count; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        if (count == 0) break;
        unsigned i = count;
        while (i > 0 && cur[i - 1] == total - count + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (unsigned j = i; j < count; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace

TEST_CASE("construction validates m + c against the field size") {
    Field f4(4);
    CHECK_NOTHROW(MdsCode(f4, 12, 4));
    CHECK_THROWS_AS(MdsCode(f4, 13, 4), std::invalid_argument);
    CHECK_THROWS_AS(MdsCode(f4, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(MdsCode(f4, 2, 0), std::invalid_argument);
    Field f2(2);
    CHECK_NOTHROW(MdsCode(f2, 2, 2));
    CHECK_THROWS_AS(MdsCode(f2, 3, 2), std::invalid_argument);
}

TEST_CASE("smallest code is the identity check: m = 1, c = 1") {
    Field f(2);
    MdsCode code(f, 1, 1);
    // P[0][0] = 1 / (0 + 1) = 1.
    CHECK(code.coefficient(0, 0) == 1);
    std::vector<Symbol> data = {2};
    CHECK(code.encode_parities(data) == std::vector<Symbol>{2});
}

TEST_CASE("parities match the definition-level oracle") {
    Field f(4);
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned c = 1; c <= 4; ++c) {
            MdsCode code(f, m, c);
            SplitMix64 rng(99);
            for (int round = 0; round < 200; ++round) {
                std::vector<Symbol> data(m);
                for (auto& d : data) d = Symbol(rng.below(16));
                REQUIRE(code.encode_parities(data) == oracle_parities(f, m, c, data));
            }
        }
    }
}

TEST_CASE("zero data gives zero parities") {
    Field f(4);
    MdsCode code(f, 3, 3);
    std::vector<Symbol> zeros(3, 0);
    CHECK(code.encode_parities(zeros) == std::vector<Symbol>(3, 0));
}

TEST_CASE("every square submatrix is invertible whenever m + c <= 10") {
    Field f(4);
    for (unsigned m = 1; m + 1 <= 10; ++m) {
        for (unsigned c = 1; m + c <= 10; ++c) {
            MdsCode code(f, m, c);
            unsigned emax = m < c ? m : c;
            for (unsigned e = 1; e <= emax; ++e) {
                for (const auto& rows : subsets(m, e)) {
                    for (const auto& cols : subsets(c, e)) {
                        std::vector<Symbol> mat(std::size_t(e) * e);
                        for (unsigned r = 0; r < e; ++r) {
                            for (unsigned x = 0; x < e; ++x) {
                                mat[r * e + x] = code.coefficient(rows[r], cols[x]);
                            }
                        }
                        REQUIRE(invertible(f, mat, e));
                    }
                }
            }
        }
    }
}

TEST_CASE("erasure decode restores the data for every erasure set") {
    Field f(4);
    const unsigned m = 4, c = 3;
    MdsCode code(f, m, c);
    SplitMix64 rng(7);
    for (int round = 0; round < 300; ++round) {
        std::vector<Symbol> data(m);
        for (auto& d : data) d = Symbol(rng.below(16));
        std::vector<Symbol> parities = code.encode_parities(data);
        for (unsigned e = 0; e <= c; ++e) {
            for (const auto& erased : subsets(m, e)) {
                std::vector<Symbol> received = data;
                for (unsigned pos : erased) received[pos] = Symbol(rng.below(16));
                std::vector<Symbol> leading(parities.begin(), parities.begin() + e);
                REQUIRE(code.erasure_decode(received, leading, erased) == data);
            }
        }
    }
}

TEST_CASE("erasure decode with no erasures returns the input unchanged") {
    Field f(3);
    MdsCode code(f, 3, 2);
    std::vector<Symbol> data = {1, 5, 7};
    CHECK(code.erasure_decode(data, {}, {}) == data);
}

TEST_CASE("erasure decode rejects malformed arguments") {
    Field f(4);
    MdsCode code(f, 4, 2);
    std::vector<Symbol> data = {1, 2, 3, 4};
    std::vector<Symbol> one_parity = {5};
    std::vector<unsigned> unsorted = {2, 1};
    std::vector<unsigned> dup = {1, 1};
    std::vector<unsigned> big = {7};
    std::vector<unsigned> three = {0, 1, 2};
    std::vector<Symbol> three_par = {1, 2, 3};
    CHECK_THROWS_AS(code.erasure_decode(data, one_parity, unsorted), std::invalid_argument);
    CHECK_THROWS_AS(code.erasure_decode(data, one_parity, dup), std::invalid_argument);
    CHECK_THROWS_AS(code.erasure_decode(data, one_parity, big), std::invalid_argument);
    CHECK_THROWS_AS(code.erasure_decode(data, three_par, three), std::invalid_argument);
    std::vector<unsigned> one = {1};
    std::vector<Symbol> two_par = {1, 2};
    CHECK_THROWS_AS(code.erasure_decode(data, two_par, one), std::invalid_argument);
}

TEST_CASE("check_parities accepts true parities on every index subset") {
    Field f(4);
    const unsigned m = 3, c = 3;
    MdsCode code(f, m, c);
    SplitMix64 rng(21);
    for (int round = 0; round < 100; ++round) {
        std::vector<Symbol> data(m);
        for (auto& d : data) d = Symbol(rng.below(16));
        std::vector<Symbol> parities = code.encode_parities(data);
        for (unsigned mask = 0; mask < (1u << c); ++mask) {
            std::vector<std::pair<unsigned, Symbol>> checks;
            for (unsigned j = 0; j < c; ++j) {
                if ((mask >> j) & 1u) checks.emplace_back(j, parities[j]);
            }
            REQUIRE(code.check_parities(data, checks));
        }
    }
}

TEST_CASE("changing any data symbol breaks every single parity check") {
    // Cauchy coefficients are all nonzero, so each parity depends on each
    // data symbol.
    Field f(4);
    const unsigned m = 3, c = 3;
    MdsCode code(f, m, c);
    SplitMix64 rng(22);
    for (int round = 0; round < 50; ++round) {
        std::vector<Symbol> data(m);
        for (auto& d : data) d = Symbol(rng.below(16));
        std::vector<Symbol> parities = code.encode_parities(data);
        for (unsigned i = 0; i < m; ++i) {
            std::vector<Symbol> tampered = data;
            tampered[i] = Symbol(tampered[i] ^ (1 + rng.below(15)));
            for (unsigned j = 0; j < c; ++j) {
                std::vector<std::pair<unsigned, Symbol>> check = {{j, parities[j]}};
                REQUIRE_FALSE(code.check_parities(tampered, check));
            }
        }
    }
}

TEST_CASE("check_parities rejects bad indices, accepts the empty list") {
    Field f(4);
    MdsCode code(f, 2, 2);
    std::vector<Symbol> data = {3, 9};
    CHECK(code.check_parities(data, {}));
    std::vector<std::pair<unsigned, Symbol>> bad = {{2, 0}};
    CHECK_THROWS_AS(code.check_parities(data, bad), std::invalid_argument);
}
