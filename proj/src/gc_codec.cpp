#include "gc/gc_codec.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gc/combinatorics.hpp"
#include "gc/deletion_channel.hpp"

namespace gc {

void GcParams::validate() const {
    if (k < 1) {
        throw std::invalid_argument("message length must be at least 1");
    }
    if (ell < 1 || ell > 16) {
        throw std::invalid_argument("block width must be in [1, 16]");
    }
    if (delta < 1) {
        throw std::invalid_argument("deletion budget must be at least 1");
    }
    if (c <= delta) {
        throw std::invalid_argument("need more parity symbols than deletions");
    }
    if (std::uint64_t(m()) + c > (std::uint64_t(1) << ell)) {
        throw std::invalid_argument("m + c exceeds the field size");
    }
}

std::uint64_t guess_count(unsigned m, unsigned delta) {
    return binomial(m + delta, delta);
}

void for_each_guess(unsigned m, unsigned delta,
                    const std::function<void(const Guess&)>& fn) {
    if (m < 1) {
        throw std::invalid_argument("need at least one block");
    }
    Guess g;
    g.per_block.assign(m, 0);
    struct Rec {
        Guess& g;
        unsigned m;
        const std::function<void(const Guess&)>& fn;
        void fill(unsigned block, unsigned remaining) {
            if (block == m - 1) {
                g.per_block[block] = remaining;
                fn(g);
                return;
            }
            for (unsigned a = 0; a <= remaining; ++a) {
                g.per_block[block] = a;
                fill(block + 1, remaining - a);
            }
        }
    } rec{g, m, fn};
    for (unsigned d1 = 0; d1 <= delta; ++d1) {
        g.systematic_deletions = d1;
        rec.fill(0, d1);
    }
}

std::vector<Guess> enumerate_guesses(unsigned m, unsigned delta) {
    std::vector<Guess> out;
    out.reserve(guess_count(m, delta));
    for_each_guess(m, delta, [&out](const Guess& g) { out.push_back(g); });
    return out;
}

namespace {

FieldParams checked_field(const GcParams& params) {
    params.validate();
    return FieldParams::standard(params.ell);
}

} // namespace

GcCodec::GcCodec(GcParams params)
    : params_(params), field_(checked_field(params_)), mds_(field_, params_.m(), params_.c) {}

std::vector<Symbol> GcCodec::message_symbols(const Bits& message) const {
    if (message.size() != params_.k) {
        throw std::invalid_argument("message length mismatch");
    }
    const unsigned m = params_.m();
    std::vector<Symbol> data(m);
    std::size_t off = 0;
    for (unsigned i = 0; i < m; ++i) {
        unsigned len = params_.block_len(i);
        data[i] = symbol_from_bits(std::span(message.data() + off, len), params_.ell);
        off += len;
    }
    return data;
}

Bits GcCodec::encode(const Bits& message) const {
    auto data = message_symbols(message);
    auto parities = mds_.encode_parities(data);
    Bits out = message;
    out.reserve(params_.n());
    for (Symbol p : parities) {
        for (unsigned b = 0; b < params_.ell; ++b) {
            std::uint8_t bit = static_cast<std::uint8_t>((p >> (params_.ell - 1 - b)) & 1u);
            for (unsigned r = 0; r <= params_.delta; ++r) {
                out.push_back(bit);
            }
        }
    }
    return out;
}

Bits GcCodec::recover_parities(const Bits& y) const {
    const std::size_t n = params_.n();
    const unsigned delta = params_.delta;
    if (y.size() > n || y.size() + delta < n) {
        throw std::invalid_argument("received length must be within delta of n");
    }
    const std::size_t budget = params_.parity_bits();

    // Each parity bit was sent delta + 1 times, so a run of r equal
    // received bits covers exactly ceil(r / (delta + 1)) parity bits as
    // long as the run lies inside the repetition region. Scanning from the
    // right, only the run that crosses into the message region can
    // overcount, and the budget cap cuts exactly there.
    Bits reversed;
    reversed.reserve(budget);
    std::size_t i = y.size();
    while (i > 0 && reversed.size() < budget) {
        std::uint8_t bit = y[i - 1];
        std::size_t run = 0;
        while (i > 0 && y[i - 1] == bit) {
            --i;
            ++run;
        }
        std::size_t copies = (run + delta) / (delta + 1);
        while (copies-- > 0 && reversed.size() < budget) {
            reversed.push_back(bit);
        }
    }
    if (reversed.size() < budget) {
        throw DecodeError("could not recover the parity bits");
    }
    return Bits(reversed.rbegin(), reversed.rend());
}

std::vector<Symbol> GcCodec::parse_parity_symbols(const Bits& parity_bits) const {
    if (parity_bits.size() != params_.parity_bits()) {
        throw std::invalid_argument("parity bit count mismatch");
    }
    std::vector<Symbol> out(params_.c);
    for (unsigned j = 0; j < params_.c; ++j) {
        out[j] = symbol_from_bits(
            std::span(parity_bits.data() + std::size_t(j) * params_.ell, params_.ell),
            params_.ell);
    }
    return out;
}

std::optional<Candidate> GcCodec::decode_guess(const Bits& y, const Guess& guess,
                                               const Bits& parity_bits) const {
    const unsigned m = params_.m();
    if (y.size() != params_.n() - params_.delta) {
        throw std::invalid_argument("received length must be n - delta");
    }
    if (guess.per_block.size() != m) {
        throw std::invalid_argument("guess block count mismatch");
    }
    unsigned total = 0;
    for (unsigned g : guess.per_block) total += g;
    if (total != guess.systematic_deletions || total > params_.delta) {
        throw std::invalid_argument("guess deletion counts are inconsistent");
    }

    for (unsigned i = 0; i < m; ++i) {
        if (guess.per_block[i] > params_.block_len(i)) {
            return std::nullopt;
        }
    }

    // Slice the first k - systematic_deletions bits of y: block i keeps
    // len_i - g_i of them. Blocks guessed to have lost bits are erased;
    // their remnants only matter for the later subsequence check.
    std::vector<Symbol> data(m, 0);
    std::vector<unsigned> erased;
    std::size_t off = 0;
    for (unsigned i = 0; i < m; ++i) {
        unsigned keep = params_.block_len(i) - guess.per_block[i];
        if (guess.per_block[i] >= 1) {
            erased.push_back(i);
        } else {
            data[i] = symbol_from_bits(std::span(y.data() + off, keep), params_.ell);
        }
        off += keep;
    }

    auto parities = parse_parity_symbols(parity_bits);
    std::vector<Symbol> leading(parities.begin(), parities.begin() + erased.size());
    std::vector<Symbol> solved = mds_.erasure_decode(data, leading, erased);

    Bits message;
    message.reserve(params_.k);
    for (unsigned i = 0; i < m; ++i) {
        unsigned len = params_.block_len(i);
        for (unsigned b = 0; b < len; ++b) {
            message.push_back(
                static_cast<std::uint8_t>((solved[i] >> (params_.ell - 1 - b)) & 1u));
        }
    }

    Candidate out;
    out.codeword = encode(message);
    out.message = std::move(message);
    return out;
}

bool GcCodec::check_candidate(const Candidate& candidate, const Bits& y,
                              const Bits& parity_bits) const {
    if (candidate.message.size() != params_.k || candidate.codeword.size() != params_.n()) {
        return false;
    }
    auto parities = parse_parity_symbols(parity_bits);
    auto data = message_symbols(candidate.message);
    std::vector<std::pair<unsigned, Symbol>> checks;
    checks.reserve(params_.c - params_.delta);
    for (unsigned j = params_.delta; j < params_.c; ++j) {
        checks.emplace_back(j, parities[j]);
    }
    if (!mds_.check_parities(data, checks)) {
        return false;
    }
    return is_subsequence(y, candidate.codeword);
}

/*
    One list decode. Erasure supports (which blocks lost bits, and how
    many) are enumerated directly; each support stands for one feasible
    guess. Per support the non-erased parity contributions come from
    precomputed suffix sums, the erased symbols from a small Cauchy solve,
    and the spare parities are compared before any candidate is built.
*/
struct ListDecodeRun {
    const GcCodec& codec;
    const GcParams& P;
    const Field& field;
    const MdsCode& mds;
    const Bits& y;
    unsigned m, ell, c, delta;

    std::vector<Symbol> parity;   // recovered parity symbols
    std::vector<Symbol> v;        // v[i][s]: block i shifted left by s
    std::vector<Symbol> t;        // suffix sums over v * P
    std::vector<std::pair<unsigned, unsigned>> support;  // (block, bits lost)
    std::vector<Symbol> mat, rhs, solved;
    std::map<Bits, Bits> found;   // message -> codeword, sorted

    ListDecodeRun(const GcCodec& cd, const Bits& received, const Bits& parity_bits)
        : codec(cd), P(cd.params()), field(cd.field()), mds(cd.mds()), y(received),
          m(P.m()), ell(P.ell), c(P.c), delta(P.delta) {
        parity = cd.parse_parity_symbols(parity_bits);

        v.assign(std::size_t(m) * (delta + 1), 0);
        for (unsigned i = 0; i < m; ++i) {
            unsigned len = P.block_len(i);
            for (unsigned s = 0; s <= delta; ++s) {
                if (std::size_t(i) * ell < s) continue;  // unreachable shift
                std::size_t off = std::size_t(i) * ell - s;
                v[std::size_t(i) * (delta + 1) + s] =
                    symbol_from_bits(std::span(y.data() + off, len), ell);
            }
        }

        t.assign(std::size_t(c) * (delta + 1) * (m + 1), 0);
        for (unsigned j = 0; j < c; ++j) {
            for (unsigned s = 0; s <= delta; ++s) {
                std::size_t base = (std::size_t(j) * (delta + 1) + s) * (m + 1);
                for (unsigned i = m; i-- > 0;) {
                    t[base + i] = t[base + i + 1] ^
                                  field.mul(v[std::size_t(i) * (delta + 1) + s],
                                            mds.coefficient(i, j));
                }
            }
        }

        support.reserve(delta);
        mat.reserve(std::size_t(delta) * delta);
        rhs.reserve(delta);
        solved.reserve(delta);
    }

    Symbol tat(unsigned j, unsigned s, unsigned i) const {
        return t[(std::size_t(j) * (delta + 1) + s) * (m + 1) + i];
    }

    // XOR of v[i][shift_i] * P[i][j] over the non-erased blocks of the
    // current support, as a difference of suffix sums per segment.
    Symbol non_erased_sum(unsigned j) const {
        Symbol acc = 0;
        unsigned lo = 0, shift = 0;
        for (auto [pos, amount] : support) {
            acc ^= tat(j, shift, lo) ^ tat(j, shift, pos);
            shift += amount;
            lo = pos + 1;
        }
        acc ^= tat(j, shift, lo);
        return acc;
    }

    void process() {
        const unsigned e = static_cast<unsigned>(support.size());

        if (e > 0) {
            // Solve the erased symbols from parities 0..e-1.
            rhs.assign(e, 0);
            for (unsigned j = 0; j < e; ++j) {
                rhs[j] = parity[j] ^ non_erased_sum(j);
            }
            mat.assign(std::size_t(e) * e, 0);
            for (unsigned j = 0; j < e; ++j) {
                for (unsigned col = 0; col < e; ++col) {
                    mat[std::size_t(j) * e + col] = mds.coefficient(support[col].first, j);
                }
            }
            for (unsigned col = 0; col < e; ++col) {
                unsigned pivot = col;
                while (pivot < e && mat[std::size_t(pivot) * e + col] == 0) ++pivot;
                if (pivot == e) {
                    throw std::logic_error("singular erasure system in an MDS code");
                }
                if (pivot != col) {
                    for (unsigned x = 0; x < e; ++x) {
                        std::swap(mat[std::size_t(pivot) * e + x], mat[std::size_t(col) * e + x]);
                    }
                    std::swap(rhs[pivot], rhs[col]);
                }
                Symbol scale = field.inv(mat[std::size_t(col) * e + col]);
                for (unsigned x = col; x < e; ++x) {
                    mat[std::size_t(col) * e + x] = field.mul(mat[std::size_t(col) * e + x], scale);
                }
                rhs[col] = field.mul(rhs[col], scale);
                for (unsigned row = 0; row < e; ++row) {
                    if (row == col) continue;
                    Symbol factor = mat[std::size_t(row) * e + col];
                    if (factor == 0) continue;
                    for (unsigned x = col; x < e; ++x) {
                        mat[std::size_t(row) * e + x] ^=
                            field.mul(factor, mat[std::size_t(col) * e + x]);
                    }
                    rhs[row] ^= field.mul(factor, rhs[col]);
                }
            }
            solved.assign(rhs.begin(), rhs.begin() + e);

            // A short final block only contributes its leading bits; clear
            // the padding so the spare-parity check sees the re-encoded
            // symbol.
            if (support[e - 1].first == m - 1 && P.k % ell != 0) {
                unsigned pad = ell - P.k % ell;
                solved[e - 1] = static_cast<Symbol>((solved[e - 1] >> pad) << pad);
            }
        }

        // Spare parities delta..c-1 must match before a candidate exists.
        for (unsigned j = delta; j < c; ++j) {
            Symbol lhs = non_erased_sum(j);
            for (unsigned x = 0; x < e; ++x) {
                lhs ^= field.mul(solved[x], mds.coefficient(support[x].first, j));
            }
            if (lhs != parity[j]) return;
        }

        materialize();
    }

    void materialize() {
        Bits message(P.k);
        unsigned shift = 0;
        std::size_t tpos = 0;
        std::size_t msg_off = 0;
        for (unsigned i = 0; i < m; ++i) {
            unsigned len = P.block_len(i);
            if (tpos < support.size() && support[tpos].first == i) {
                Symbol sym = solved[tpos];
                for (unsigned b = 0; b < len; ++b) {
                    message[msg_off + b] =
                        static_cast<std::uint8_t>((sym >> (ell - 1 - b)) & 1u);
                }
                shift += support[tpos].second;
                ++tpos;
            } else {
                std::size_t off = std::size_t(i) * ell - shift;
                std::copy(y.begin() + off, y.begin() + off + len, message.begin() + msg_off);
            }
            msg_off += len;
        }
        Bits codeword = codec.encode(message);
        if (is_subsequence(y, codeword)) {
            found.emplace(std::move(message), std::move(codeword));
        }
    }

    void enumerate(unsigned first, unsigned used) {
        for (unsigned pos = first; pos < m; ++pos) {
            unsigned cap = std::min(delta - used, P.block_len(pos));
            for (unsigned amount = 1; amount <= cap; ++amount) {
                support.emplace_back(pos, amount);
                process();
                if (used + amount < delta && pos + 1 < m) {
                    enumerate(pos + 1, used + amount);
                }
                support.pop_back();
            }
        }
    }

    void execute() {
        process();         // the all-in-the-parity-region guess
        enumerate(0, 0);
    }
};

CandidateList GcCodec::list_decode(const Bits& y) const {
    if (y.size() != params_.n() - params_.delta) {
        throw std::invalid_argument("received length must be n - delta");
    }
    Bits parity_bits = recover_parities(y);

    ListDecodeRun run(*this, y, parity_bits);
    run.execute();

    if (run.found.empty()) {
        throw DecodeError("no codeword is consistent with the received string");
    }
    CandidateList out;
    out.reserve(run.found.size());
    for (auto& [message, codeword] : run.found) {
        out.push_back(Candidate{message, codeword});
    }
    return out;
}

} // namespace gc
