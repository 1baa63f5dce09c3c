#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gc/gc_codec.hpp"
#include "gc/vt.hpp"

namespace gc {

// Which list decoder a trial exercises.
enum class DecoderKind {
    Gc,     // block code with guessed erasures
    Vt,     // VT baseline: supersequences + single-deletion decoding
    Naive,  // no code at all: every length-n supersequence of y
};

// How the deletion pattern is chosen per trial.
enum class PatternMode {
    Uniform,       // one uniform random pattern per trial
    Adversarial,   // exact worst case over all patterns (oracle scale only)
};

struct ExperimentConfig {
    std::vector<unsigned> k_list = {32, 64, 128, 256, 512, 1024};
    std::vector<unsigned> delta_list = {1, 2, 3};
    std::optional<unsigned> ell_override;  // default: max(1, ceil(log2 k))
    std::optional<unsigned> c_override;    // default: delta + 1
    std::uint64_t trials = 10000;
    std::uint64_t base_seed = 1;
    DecoderKind decoder = DecoderKind::Gc;
    PatternMode mode = PatternMode::Uniform;
    unsigned threads = 0;                  // 0: hardware concurrency
};

// One sweep cell. l_av_se is the standard error of l_av (not serialized).
struct ExperimentRow {
    unsigned k = 0;
    unsigned delta = 0;
    unsigned ell = 0;   // VT rows report redundancy here, naive rows 0
    unsigned c = 0;     // 0 for VT and naive rows
    std::uint64_t trials = 0;
    double l_av = 0.0;
    std::size_t l_max = 0;
    double pr_fail = 0.0;   // fraction of trials with list size >= 2
    std::uint64_t seed = 0;
    double l_av_se = 0.0;
    double wall_seconds = 0.0;
};

// max(1, ceil(log2 k)): the default block width for a sweep cell.
unsigned ell_rule(unsigned k);

// Code parameters for one sweep cell; throws std::invalid_argument when
// the resulting parameters are invalid.
GcParams params_for(const ExperimentConfig& config, unsigned k, unsigned delta);

// One decode trial: draw a message and a uniform deletion pattern from the
// per-trial stream mix_seed(base_seed, trial_index), decode, and return
// the list size. Throws std::logic_error if the transmitted codeword is
// missing from the list. Convenience form; sweeps share the setup work.
std::size_t run_trial(const ExperimentConfig& config, unsigned k, unsigned delta,
                      std::uint64_t trial_index);

// Full sweep over k_list x delta_list.
std::vector<ExperimentRow> run_table2(const ExperimentConfig& config);

// GC and VT side by side on the same k_list (decoder field ignored).
// Returns pairs (decoder name, row).
std::vector<std::pair<std::string, ExperimentRow>>
run_compare(const ExperimentConfig& config);

// CSV serialization. Floats use six significant digits. Byte-identical for
// identical configs, regardless of thread count.
std::string table2_csv(const std::vector<ExperimentRow>& rows);
std::string compare_csv(const std::vector<std::pair<std::string, ExperimentRow>>& rows);

} // namespace gc
