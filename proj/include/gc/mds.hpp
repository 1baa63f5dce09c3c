#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gc/gf2e.hpp"

namespace gc {

/*
    Systematic MDS code over GF(2^ell) in Cauchy form. A codeword is the m
    data symbols followed by c parity symbols, where parity j is

        p_j = sum_i data_i * P[i][j],      P[i][j] = 1 / (x_i + y_j)

    with evaluation points x_i = i (data) and y_j = m + j (parity). The
    points are distinct as long as m + c <= 2^ell, and every square
    submatrix of a Cauchy matrix is invertible, which is exactly the MDS
    property: any e erased data symbols can be recovered from any e
    parities by solving an e x e system.
*/
class MdsCode {
public:
    // Throws std::invalid_argument unless 1 <= m, 1 <= c, m + c <= 2^ell.
    MdsCode(const Field& field, unsigned data_count, unsigned parity_count);

    unsigned data_count() const { return m_; }
    unsigned parity_count() const { return c_; }
    const Field& field() const { return field_; }

    // Cauchy coefficient P[i][j] for data symbol i, parity j.
    Symbol coefficient(unsigned i, unsigned j) const { return p_[std::size_t(i) * c_ + j]; }

    // data.size() must equal m. Returns the c parity symbols in order.
    std::vector<Symbol> encode_parities(std::span<const Symbol> data) const;

    // Recovers erased data symbols. received holds all m data symbols with
    // the erased slots carrying arbitrary values; erased lists their
    // positions (sorted, distinct); leading_parities holds parities
    // 0..e-1. Returns the completed data vector. e == 0 returns the input
    // unchanged. Throws std::invalid_argument on malformed arguments.
    std::vector<Symbol> erasure_decode(std::span<const Symbol> received,
                                       std::span<const Symbol> leading_parities,
                                       std::span<const unsigned> erased) const;

    // True when every (index, value) pair matches the parity recomputed
    // from data. Empty check list is vacuously true.
    bool check_parities(std::span<const Symbol> data,
                        std::span<const std::pair<unsigned, Symbol>> parities) const;

private:
    const Field& field_;
    unsigned m_ = 0;
    unsigned c_ = 0;
    std::vector<Symbol> p_;  // row-major m x c coefficient table
};

} // namespace gc
