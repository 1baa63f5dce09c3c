#include "gc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gc/deletion_channel.hpp"
#include "gc/rng.hpp"

namespace gc {

namespace {

// Adversarial sweeps and the naive decoder are exhaustive; keep them at
// oracle scale.
constexpr std::size_t kExhaustiveLimit = 24;

struct TrialContext {
    DecoderKind decoder = DecoderKind::Gc;
    PatternMode mode = PatternMode::Uniform;
    std::uint64_t base_seed = 0;
    unsigned k = 0;
    unsigned delta = 0;
    std::unique_ptr<GcCodec> codec;  // DecoderKind::Gc
    vt::VtParams vt_params;        // DecoderKind::Vt
    std::size_t n = 0;             // codeword length on the channel
};

std::size_t decode_and_count(const TrialContext& ctx, const Bits& x, const Bits& y) {
    switch (ctx.decoder) {
        case DecoderKind::Gc: {
            CandidateList list = ctx.codec->list_decode(y);
            bool hit = std::any_of(list.begin(), list.end(),
                                   [&](const Candidate& c) { return c.codeword == x; });
            if (!hit) {
                throw std::logic_error("transmitted codeword missing from the list");
            }
            return list.size();
        }
        case DecoderKind::Vt: {
            std::vector<Bits> list = vt::list_decode_multi(y, ctx.delta, ctx.vt_params);
            if (std::find(list.begin(), list.end(), x) == list.end()) {
                throw std::logic_error("transmitted codeword missing from the list");
            }
            return list.size();
        }
        case DecoderKind::Naive: {
            std::vector<Bits> list = enumerate_supersequences(y, x.size());
            if (!std::binary_search(list.begin(), list.end(), x)) {
                throw std::logic_error("transmitted string missing from the list");
            }
            return list.size();
        }
    }
    throw std::logic_error("unknown decoder");
}

std::size_t run_one(const TrialContext& ctx, std::uint64_t trial_index) {
    SplitMix64 rng(mix_seed(ctx.base_seed, trial_index));
    Bits message = random_bits(rng, ctx.k);

    Bits x;
    switch (ctx.decoder) {
        case DecoderKind::Gc:
            x = ctx.codec->encode(message);
            break;
        case DecoderKind::Vt:
            x = vt::encode_systematic(message, ctx.vt_params);
            break;
        case DecoderKind::Naive:
            x = message;
            break;
    }

    if (ctx.mode == PatternMode::Adversarial) {
        std::size_t worst = 0;
        for (const DeletionPattern& pattern : enumerate_patterns(x.size(), ctx.delta)) {
            Bits y = apply_deletions(x, pattern);
            worst = std::max(worst, decode_and_count(ctx, x, y));
        }
        return worst;
    }

    DeletionPattern pattern = sample_pattern(x.size(), ctx.delta, rng);
    Bits y = apply_deletions(x, pattern);
    return decode_and_count(ctx, x, y);
}

TrialContext make_context(const ExperimentConfig& config, unsigned k, unsigned delta,
                          DecoderKind decoder, ExperimentRow& row) {
    TrialContext ctx;
    ctx.decoder = decoder;
    ctx.mode = config.mode;
    ctx.base_seed = config.base_seed;
    ctx.k = k;
    ctx.delta = delta;

    row.k = k;
    row.delta = delta;
    row.trials = config.trials;
    row.seed = config.base_seed;

    switch (decoder) {
        case DecoderKind::Gc: {
            GcParams p = params_for(config, k, delta);
            ctx.codec = std::make_unique<GcCodec>(p);
            ctx.n = p.n();
            row.ell = p.ell;
            row.c = p.c;
            break;
        }
        case DecoderKind::Vt: {
            ctx.vt_params = vt::params_for_message_length(k);
            ctx.n = ctx.vt_params.n;
            row.ell = vt::redundancy(ctx.vt_params.n);
            row.c = 0;
            break;
        }
        case DecoderKind::Naive: {
            ctx.n = k;
            row.ell = 0;
            row.c = 0;
            if (ctx.n > kExhaustiveLimit || delta > 3) {
                throw std::invalid_argument("naive decoder is exhaustive; desk scale only");
            }
            break;
        }
    }
    if (delta > ctx.n) {
        throw std::invalid_argument("deletion count exceeds the codeword length");
    }
    if (config.mode == PatternMode::Adversarial && ctx.n > kExhaustiveLimit) {
        throw std::invalid_argument("adversarial mode sweeps every pattern; desk scale only");
    }
    return ctx;
}

ExperimentRow run_cell(const ExperimentConfig& config, unsigned k, unsigned delta,
                       DecoderKind decoder) {
    auto start = std::chrono::steady_clock::now();

    ExperimentRow row;
    TrialContext ctx = make_context(config, k, delta, decoder, row);

    std::vector<std::size_t> sizes(config.trials);
    unsigned threads = config.threads != 0
                           ? config.threads
                           : std::max(1u, std::thread::hardware_concurrency());
    if (std::uint64_t(threads) > config.trials) {
        threads = static_cast<unsigned>(std::max<std::uint64_t>(1, config.trials));
    }

    if (threads <= 1) {
        for (std::uint64_t i = 0; i < config.trials; ++i) {
            sizes[i] = run_one(ctx, i);
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::atomic<bool> stop{false};
        std::mutex error_mutex;
        std::exception_ptr error;
        auto worker = [&]() {
            for (;;) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= config.trials || stop.load()) return;
                try {
                    sizes[i] = run_one(ctx, i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    stop.store(true);
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t worst = 0;
    std::uint64_t failures = 0;
    for (std::size_t s : sizes) {
        sum += double(s);
        sum_sq += double(s) * double(s);
        worst = std::max(worst, s);
        if (s >= 2) ++failures;
    }
    if (config.trials > 0) {
        double mean = sum / double(config.trials);
        row.l_av = mean;
        row.l_max = worst;
        row.pr_fail = double(failures) / double(config.trials);
        double variance = std::max(0.0, sum_sq / double(config.trials) - mean * mean);
        row.l_av_se = std::sqrt(variance / double(config.trials));
    }
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void append_row_fields(std::string& out, const ExperimentRow& r) {
    out += std::to_string(r.k);
    out += ',';
    out += std::to_string(r.delta);
    out += ',';
    out += std::to_string(r.ell);
    out += ',';
    out += std::to_string(r.c);
    out += ',';
    out += std::to_string(r.trials);
    out += ',';
    out += fmt_double(r.l_av);
    out += ',';
    out += std::to_string(r.l_max);
    out += ',';
    out += fmt_double(r.pr_fail);
    out += ',';
    out += std::to_string(r.seed);
    out += '\n';
}

} // namespace

unsigned ell_rule(unsigned k) {
    if (k <= 2) return 1;
    return static_cast<unsigned>(std::bit_width(k - 1));
}

GcParams params_for(const ExperimentConfig& config, unsigned k, unsigned delta) {
    GcParams p;
    p.k = k;
    p.delta = delta;
    p.ell = config.ell_override.value_or(ell_rule(k));
    p.c = config.c_override.value_or(delta + 1);
    p.validate();
    return p;
}

std::size_t run_trial(const ExperimentConfig& config, unsigned k, unsigned delta,
                      std::uint64_t trial_index) {
    ExperimentRow scratch;
    TrialContext ctx = make_context(config, k, delta, config.decoder, scratch);
    return run_one(ctx, trial_index);
}

std::vector<ExperimentRow> run_table2(const ExperimentConfig& config) {
    std::vector<ExperimentRow> rows;
    if (config.trials == 0) return rows;
    rows.reserve(config.k_list.size() * config.delta_list.size());
    for (unsigned k : config.k_list) {
        for (unsigned delta : config.delta_list) {
            rows.push_back(run_cell(config, k, delta, config.decoder));
        }
    }
    return rows;
}

std::vector<std::pair<std::string, ExperimentRow>>
run_compare(const ExperimentConfig& config) {
    std::vector<std::pair<std::string, ExperimentRow>> rows;
    if (config.trials == 0) return rows;
    for (unsigned k : config.k_list) {
        for (unsigned delta : config.delta_list) {
            rows.emplace_back("gc", run_cell(config, k, delta, DecoderKind::Gc));
            rows.emplace_back("vt", run_cell(config, k, delta, DecoderKind::Vt));
        }
    }
    return rows;
}

std::string table2_csv(const std::vector<ExperimentRow>& rows) {
    std::string out = "k,delta,ell,c,trials,L_av,L_max,pr_fail,seed\n";
    for (const ExperimentRow& r : rows) {
        append_row_fields(out, r);
    }
    return out;
}

std::string compare_csv(const std::vector<std::pair<std::string, ExperimentRow>>& rows) {
    std::string out = "decoder,k,delta,ell,c,trials,L_av,L_max,pr_fail,seed\n";
    for (const auto& [decoder, r] : rows) {
        out += decoder;
        out += ',';
        append_row_fields(out, r);
    }
    return out;
}

} // namespace gc
