#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gc/bits.hpp"

namespace gc {

// Element of GF(2^ell), ell <= 16, stored as the bit mask of its polynomial
// representation.
using Symbol = std::uint16_t;

struct FieldParams {
    unsigned ell = 0;         // field extension degree, 1..16
    std::uint32_t poly = 0;   // reduction polynomial mask, includes the x^ell term

    // The numerically smallest irreducible polynomial of each degree,
    // revalidated by trial division on every call.
    static FieldParams standard(unsigned ell);
};

// Irreducibility over GF(2) by trial division against every polynomial of
// degree <= deg(poly)/2.
bool is_irreducible(std::uint32_t poly);

// GF(2^ell) arithmetic through log/antilog tables built once at
// construction. Multiplication walks a generator of the multiplicative
// group, so the tables cover every nonzero element.
class Field {
public:
    explicit Field(FieldParams params);
    explicit Field(unsigned ell) : Field(FieldParams::standard(ell)) {}

    unsigned ell() const { return params_.ell; }
    std::uint32_t size() const { return order_; }
    const FieldParams& params() const { return params_; }

    Symbol add(Symbol a, Symbol b) const { return a ^ b; }

    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = std::uint32_t(log_[a]) + log_[b];
        if (s >= order_ - 1) s -= order_ - 1;
        return exp_[s];
    }

    // Multiplicative inverse. Throws std::domain_error on zero.
    Symbol inv(Symbol a) const;

private:
    FieldParams params_;
    std::uint32_t order_ = 0;          // 2^ell
    std::vector<Symbol> exp_;          // exp_[i] = g^i, i in [0, order-1)
    std::vector<std::uint16_t> log_;   // log_[exp_[i]] = i; log_[0] unused
};

// Big-endian bit packing: the first bit of the block is the highest
// coefficient. Blocks shorter than ell are padded with zeros on the right,
// i.e. the low-order coefficients. block.size() must be <= ell.
Symbol symbol_from_bits(std::span<const std::uint8_t> block, unsigned ell);

Bits bits_from_symbol(Symbol value, unsigned ell);
void append_symbol_bits(Bits& out, Symbol value, unsigned ell);

} // namespace gc
