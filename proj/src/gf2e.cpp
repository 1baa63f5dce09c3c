#include "gc/gf2e.hpp"

#include <bit>
#include <stdexcept>

namespace gc {

namespace {

// Remainder of a by b over GF(2), both as polynomial masks.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    int shift = std::bit_width(a) - std::bit_width(b);
    while (shift >= 0) {
        if ((a >> (shift + std::bit_width(b) - 1)) & 1u) {
            a ^= b << shift;
        }
        --shift;
    }
    return a;
}

// Carryless multiply-and-reduce, used only to bootstrap the tables.
Symbol slow_mul(Symbol a, Symbol b, std::uint32_t poly, unsigned ell) {
    std::uint32_t acc = 0;
    std::uint32_t shifted = a;
    std::uint32_t high = 1u << ell;
    for (std::uint32_t bits = b; bits != 0; bits >>= 1) {
        if (bits & 1u) acc ^= shifted;
        shifted <<= 1;
        if (shifted & high) shifted ^= poly;
    }
    return static_cast<Symbol>(acc);
}

// Numerically smallest irreducible polynomial of each degree 1..16.
constexpr std::uint32_t kStandardPoly[17] = {
    0,       0x2,    0x7,    0xb,    0x13,   0x25,    0x43,    0x83,
    0x11b,   0x203,  0x409,  0x805,  0x1009, 0x201b,  0x4021,  0x8003,
    0x1002b,
};

} // namespace

bool is_irreducible(std::uint32_t poly) {
    int degree = std::bit_width(poly) - 1;
    if (degree < 1) return false;
    // A reducible polynomial has an irreducible factor of degree at most
    // degree/2, so trying every divisor up to that bound is decisive.
    std::uint32_t limit = 2u << (unsigned(degree) / 2);
    for (std::uint32_t q = 2; q < limit; ++q) {
        if (poly_mod(poly, q) == 0) return false;
    }
    return true;
}

FieldParams FieldParams::standard(unsigned ell) {
    if (ell < 1 || ell > 16) {
        throw std::invalid_argument("field degree must be in [1, 16]");
    }
    FieldParams p{ell, kStandardPoly[ell]};
    if (!is_irreducible(p.poly)) {
        throw std::logic_error("built-in reduction polynomial failed validation");
    }
    return p;
}

Field::Field(FieldParams params) : params_(params) {
    if (params_.ell < 1 || params_.ell > 16) {
        throw std::invalid_argument("field degree must be in [1, 16]");
    }
    if (std::bit_width(params_.poly) != int(params_.ell) + 1) {
        throw std::invalid_argument("reduction polynomial degree does not match ell");
    }
    if (!is_irreducible(params_.poly)) {
        throw std::invalid_argument("reduction polynomial is reducible");
    }
    order_ = 1u << params_.ell;

    // Find a generator of the multiplicative group by checking the order
    // of each candidate, then tabulate its powers.
    std::uint32_t group = order_ - 1;
    Symbol generator = 1;
    for (std::uint32_t g = (order_ == 2) ? 1 : 2; g < order_; ++g) {
        Symbol value = 1;
        std::uint32_t steps = 0;
        do {
            value = slow_mul(value, static_cast<Symbol>(g), params_.poly, params_.ell);
            ++steps;
        } while (value != 1);
        if (steps == group) {
            generator = static_cast<Symbol>(g);
            break;
        }
    }

    exp_.assign(group, 0);
    log_.assign(order_, 0);
    Symbol value = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        exp_[i] = value;
        log_[value] = static_cast<std::uint16_t>(i);
        value = slow_mul(value, generator, params_.poly, params_.ell);
    }
    if (value != 1) {
        throw std::logic_error("generator search failed");
    }
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) {
        throw std::domain_error("zero has no multiplicative inverse");
    }
    std::uint32_t group = order_ - 1;
    std::uint32_t e = (group - log_[a]) % group;
    return exp_[e];
}

Symbol symbol_from_bits(std::span<const std::uint8_t> block, unsigned ell) {
    if (block.size() > ell) {
        throw std::invalid_argument("block longer than symbol width");
    }
    std::uint32_t value = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
        value |= std::uint32_t(block[i] & 1u) << (ell - 1 - i);
    }
    return static_cast<Symbol>(value);
}

Bits bits_from_symbol(Symbol value, unsigned ell) {
    Bits out;
    append_symbol_bits(out, value, ell);
    return out;
}

void append_symbol_bits(Bits& out, Symbol value, unsigned ell) {
    for (unsigned i = 0; i < ell; ++i) {
        out.push_back(static_cast<std::uint8_t>((value >> (ell - 1 - i)) & 1u));
    }
}

} // namespace gc
