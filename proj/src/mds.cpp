#include "gc/mds.hpp"

#include <stdexcept>

namespace gc {

MdsCode::MdsCode(const Field& field, unsigned data_count, unsigned parity_count)
    : field_(field), m_(data_count), c_(parity_count) {
    if (m_ < 1 || c_ < 1) {
        throw std::invalid_argument("MDS code needs at least one data and one parity symbol");
    }
    if (std::uint64_t(m_) + c_ > field_.size()) {
        throw std::invalid_argument("m + c exceeds the field size");
    }
    p_.resize(std::size_t(m_) * c_);
    for (unsigned i = 0; i < m_; ++i) {
        for (unsigned j = 0; j < c_; ++j) {
            // x_i = i and y_j = m + j never coincide, so the sum is nonzero.
            Symbol diff = static_cast<Symbol>(i ^ (m_ + j));
            p_[std::size_t(i) * c_ + j] = field_.inv(diff);
        }
    }
}

std::vector<Symbol> MdsCode::encode_parities(std::span<const Symbol> data) const {
    if (data.size() != m_) {
        throw std::invalid_argument("data symbol count mismatch");
    }
    std::vector<Symbol> parities(c_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (data[i] == 0) continue;
        for (unsigned j = 0; j < c_; ++j) {
            parities[j] ^= field_.mul(data[i], coefficient(i, j));
        }
    }
    return parities;
}

std::vector<Symbol> MdsCode::erasure_decode(std::span<const Symbol> received,
                                            std::span<const Symbol> leading_parities,
                                            std::span<const unsigned> erased) const {
    if (received.size() != m_) {
        throw std::invalid_argument("data symbol count mismatch");
    }
    const unsigned e = static_cast<unsigned>(erased.size());
    if (e == 0) {
        return std::vector<Symbol>(received.begin(), received.end());
    }
    if (e > c_) {
        throw std::invalid_argument("more erasures than parity symbols");
    }
    if (leading_parities.size() != e) {
        throw std::invalid_argument("need exactly one parity per erasure");
    }
    for (unsigned t = 0; t < e; ++t) {
        if (erased[t] >= m_ || (t > 0 && erased[t] <= erased[t - 1])) {
            throw std::invalid_argument("erasure positions must be sorted, distinct, < m");
        }
    }

    std::vector<Symbol> out(received.begin(), received.end());

    // rhs_j = p_j minus the contribution of the surviving symbols.
    std::vector<Symbol> rhs(leading_parities.begin(), leading_parities.end());
    {
        unsigned t = 0;
        for (unsigned i = 0; i < m_; ++i) {
            if (t < e && erased[t] == i) {
                ++t;
                continue;
            }
            if (out[i] == 0) continue;
            for (unsigned j = 0; j < e; ++j) {
                rhs[j] ^= field_.mul(out[i], coefficient(i, j));
            }
        }
    }

    // Solve M x = rhs with M[j][t] = P[erased[t]][j] by Gaussian
    // elimination. M is a submatrix of a Cauchy matrix, hence invertible.
    std::vector<Symbol> mat(std::size_t(e) * e);
    for (unsigned j = 0; j < e; ++j) {
        for (unsigned t = 0; t < e; ++t) {
            mat[std::size_t(j) * e + t] = coefficient(erased[t], j);
        }
    }
    for (unsigned col = 0; col < e; ++col) {
        unsigned pivot = col;
        while (pivot < e && mat[std::size_t(pivot) * e + col] == 0) ++pivot;
        if (pivot == e) {
            throw std::logic_error("singular erasure system in an MDS code");
        }
        if (pivot != col) {
            for (unsigned t = 0; t < e; ++t) {
                std::swap(mat[std::size_t(pivot) * e + t], mat[std::size_t(col) * e + t]);
            }
            std::swap(rhs[pivot], rhs[col]);
        }
        Symbol scale = field_.inv(mat[std::size_t(col) * e + col]);
        for (unsigned t = col; t < e; ++t) {
            mat[std::size_t(col) * e + t] = field_.mul(mat[std::size_t(col) * e + t], scale);
        }
        rhs[col] = field_.mul(rhs[col], scale);
        for (unsigned row = 0; row < e; ++row) {
            if (row == col) continue;
            Symbol factor = mat[std::size_t(row) * e + col];
            if (factor == 0) continue;
            for (unsigned t = col; t < e; ++t) {
                mat[std::size_t(row) * e + t] ^= field_.mul(factor, mat[std::size_t(col) * e + t]);
            }
            rhs[row] ^= field_.mul(factor, rhs[col]);
        }
    }

    for (unsigned t = 0; t < e; ++t) {
        out[erased[t]] = rhs[t];
    }
    return out;
}

bool MdsCode::check_parities(std::span<const Symbol> data,
                             std::span<const std::pair<unsigned, Symbol>> parities) const {
    if (data.size() != m_) {
        throw std::invalid_argument("data symbol count mismatch");
    }
    for (const auto& [index, expected] : parities) {
        if (index >= c_) {
            throw std::invalid_argument("parity index out of range");
        }
        Symbol actual = 0;
        for (unsigned i = 0; i < m_; ++i) {
            if (data[i] == 0) continue;
            actual ^= field_.mul(data[i], coefficient(i, index));
        }
        if (actual != expected) return false;
    }
    return true;
}

} // namespace gc
