// Command line front end: encode, corrupt, decode, statistics sweeps.
// Exit codes: 0 success, 1 usage or configuration error, 2 decode error,
// 3 empty result (zero trials requested).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gc/bits.hpp"
#include "gc/deletion_channel.hpp"
#include "gc/error.hpp"
#include "gc/experiment.hpp"
#include "gc/gc_codec.hpp"
#include "gc/oracle.hpp"
#include "gc/rng.hpp"

namespace {

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return read_lines(std::cin);
    }
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    return read_lines(f);
}

// Relative output paths land under $GC_OUTPUT_DIR when it is set.
std::string resolve_output_path(const std::string& path) {
    if (path.empty() || path == "-" || path.front() == '/') {
        return path;
    }
    const char* dir = std::getenv("GC_OUTPUT_DIR");
    if (dir != nullptr && *dir != '\0') {
        return std::string(dir) + "/" + path;
    }
    return path;
}

void write_output(const std::string& path, const std::string& text) {
    std::string resolved = resolve_output_path(path);
    if (resolved.empty() || resolved == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(resolved);
    if (!f) {
        throw std::runtime_error("cannot open output file: " + resolved);
    }
    f << text;
}

gc::GcParams make_params(unsigned k, std::optional<unsigned> ell,
                         std::optional<unsigned> c, unsigned delta) {
    gc::GcParams p;
    p.k = k;
    p.delta = delta;
    p.ell = ell.value_or(gc::ell_rule(k));
    p.c = c.value_or(delta + 1);
    p.validate();
    return p;
}

struct CodecOptions {
    std::optional<unsigned> k;
    std::optional<unsigned> ell;
    std::optional<unsigned> c;
    unsigned delta = 1;
    std::string input = "-";
    std::string output = "-";
};

int cmd_encode(const CodecOptions& opt) {
    std::string out;
    std::map<unsigned, gc::GcCodec> codecs;  // one per message length seen
    for (const std::string& line : read_input(opt.input)) {
        gc::Bits message = gc::bits_from_string(line);
        unsigned k = static_cast<unsigned>(message.size());
        if (opt.k && *opt.k != k) {
            throw std::invalid_argument("message length does not match --k");
        }
        auto it = codecs.find(k);
        if (it == codecs.end()) {
            it = codecs.try_emplace(k, make_params(k, opt.ell, opt.c, opt.delta)).first;
        }
        out += gc::to_string(it->second.encode(message));
        out += '\n';
    }
    write_output(opt.output, out);
    return 0;
}

struct CorruptOptions {
    std::optional<unsigned> delta;
    std::vector<std::uint32_t> pattern;
    std::uint64_t seed = 0;
    std::string input = "-";
    std::string output = "-";
};

int cmd_corrupt(const CorruptOptions& opt) {
    if (!opt.pattern.empty() && opt.delta && *opt.delta != opt.pattern.size()) {
        throw std::invalid_argument("--delta does not match the pattern size");
    }
    if (opt.pattern.empty() && !opt.delta) {
        throw std::invalid_argument("need either --pattern or --delta");
    }
    std::string out;
    std::uint64_t line_index = 0;
    for (const std::string& line : read_input(opt.input)) {
        gc::Bits x = gc::bits_from_string(line);
        gc::DeletionPattern pattern = opt.pattern;
        if (pattern.empty()) {
            gc::SplitMix64 rng(gc::mix_seed(opt.seed, line_index));
            pattern = gc::sample_pattern(x.size(), *opt.delta, rng);
        }
        std::string positions;
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            if (i) positions += ',';
            positions += std::to_string(pattern[i]);
        }
        std::cerr << "line " << (line_index + 1) << ": deleted positions " << positions << "\n";
        out += gc::to_string(gc::apply_deletions(x, pattern));
        out += '\n';
        ++line_index;
    }
    write_output(opt.output, out);
    return 0;
}

int cmd_decode(const CodecOptions& opt) {
    if (!opt.k) {
        throw std::invalid_argument("decode requires --k");
    }
    gc::GcCodec codec(make_params(*opt.k, opt.ell, opt.c, opt.delta));
    std::string out;
    for (const std::string& line : read_input(opt.input)) {
        gc::Bits y = gc::bits_from_string(line);
        if (y.size() != codec.params().n() - codec.params().delta) {
            throw std::invalid_argument(
                "received length must be n - delta = " +
                std::to_string(codec.params().n() - codec.params().delta));
        }
        gc::CandidateList list = codec.list_decode(y);
        std::cerr << "list size: " << list.size() << "\n";
        for (const gc::Candidate& cand : list) {
            out += gc::to_string(cand.codeword);
            out += '\n';
        }
    }
    write_output(opt.output, out);
    return 0;
}

struct SweepOptions {
    gc::ExperimentConfig config;
    std::string decoder = "gc";
    std::string mode = "uniform";
    std::string output = "-";
};

void apply_choices(SweepOptions& opt) {
    if (opt.decoder == "gc") {
        opt.config.decoder = gc::DecoderKind::Gc;
    } else if (opt.decoder == "vt") {
        opt.config.decoder = gc::DecoderKind::Vt;
    } else {
        opt.config.decoder = gc::DecoderKind::Naive;
    }
    opt.config.mode = opt.mode == "adversarial" ? gc::PatternMode::Adversarial
                                                : gc::PatternMode::Uniform;
}

void log_row(const gc::ExperimentRow& r, const std::string& decoder) {
    std::cerr << decoder << " k=" << r.k << " delta=" << r.delta
              << ": L_av=" << r.l_av << " L_max=" << r.l_max
              << " pr_fail=" << r.pr_fail << " (" << r.wall_seconds << " s)\n";
}

int cmd_table2(SweepOptions& opt) {
    apply_choices(opt);
    std::vector<gc::ExperimentRow> rows = gc::run_table2(opt.config);
    for (const auto& r : rows) log_row(r, opt.decoder);
    write_output(opt.output, gc::table2_csv(rows));
    if (rows.empty()) {
        std::cerr << "empty result: no trials requested\n";
        return 3;
    }
    return 0;
}

int cmd_compare(SweepOptions& opt) {
    auto rows = gc::run_compare(opt.config);
    for (const auto& [decoder, r] : rows) log_row(r, decoder);
    write_output(opt.output, gc::compare_csv(rows));
    if (rows.empty()) {
        std::cerr << "empty result: no trials requested\n";
        return 3;
    }
    return 0;
}

struct AdversarialOptions {
    CodecOptions codec;
    std::size_t max_n = 24;
};

int cmd_adversarial(const AdversarialOptions& opt) {
    if (!opt.codec.k) {
        throw std::invalid_argument("adversarial requires --k");
    }
    gc::GcCodec codec(make_params(*opt.codec.k, opt.codec.ell, opt.codec.c, opt.codec.delta));
    gc::oracle::OracleBudget budget;
    budget.max_n = opt.max_n;
    std::string out;
    for (const std::string& line : read_input(opt.codec.input)) {
        gc::Bits message = gc::bits_from_string(line);
        if (message.size() != *opt.codec.k) {
            throw std::invalid_argument("message length does not match --k");
        }
        std::size_t worst = gc::oracle::exact_worst_case_list(message, codec, budget);
        out += std::to_string(worst);
        out += '\n';
    }
    write_output(opt.codec.output, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Systematic deletion-correcting block codes with list decoding"};
    app.require_subcommand(1);

    CodecOptions encode_opt;
    CLI::App* encode = app.add_subcommand("encode", "encode message lines to codewords");
    encode->add_option("--k", encode_opt.k, "message length (default: per input line)");
    encode->add_option("--ell", encode_opt.ell, "block width (default: max(1, ceil(log2 k)))");
    encode->add_option("--c", encode_opt.c, "parity symbols (default: delta + 1)");
    encode->add_option("--delta", encode_opt.delta, "deletions to protect against")
        ->default_val(1);
    encode->add_option("--input", encode_opt.input, "input file, - for stdin");
    encode->add_option("--output", encode_opt.output, "output file, - for stdout");

    CorruptOptions corrupt_opt;
    CLI::App* corrupt = app.add_subcommand("corrupt", "delete bits from each input line");
    corrupt->add_option("--delta", corrupt_opt.delta, "number of deletions per line");
    corrupt->add_option("--pattern", corrupt_opt.pattern,
                        "fixed 1-based deletion positions, comma separated")
        ->delimiter(',');
    corrupt->add_option("--seed", corrupt_opt.seed, "seed for sampled patterns")
        ->default_val(0);
    corrupt->add_option("--input", corrupt_opt.input, "input file, - for stdin");
    corrupt->add_option("--output", corrupt_opt.output, "output file, - for stdout");

    CodecOptions decode_opt;
    CLI::App* decode = app.add_subcommand("decode", "list decode received lines");
    decode->add_option("--k", decode_opt.k, "message length")->required();
    decode->add_option("--ell", decode_opt.ell, "block width (default: max(1, ceil(log2 k)))");
    decode->add_option("--c", decode_opt.c, "parity symbols (default: delta + 1)");
    decode->add_option("--delta", decode_opt.delta, "deletions to correct")->default_val(1);
    decode->add_option("--input", decode_opt.input, "input file, - for stdin");
    decode->add_option("--output", decode_opt.output, "output file, - for stdout");

    SweepOptions table2_opt;
    CLI::App* table2 = app.add_subcommand(
        "table2", "sweep list-size statistics over message lengths and deletion counts");
    table2->add_option("--k", table2_opt.config.k_list, "message lengths")->delimiter(',');
    table2->add_option("--delta", table2_opt.config.delta_list, "deletion counts")
        ->delimiter(',');
    table2->add_option("--ell", table2_opt.config.ell_override, "block width override");
    table2->add_option("--c", table2_opt.config.c_override, "parity symbol override");
    table2->add_option("--trials", table2_opt.config.trials, "trials per cell")
        ->default_val(10000);
    table2->add_option("--seed", table2_opt.config.base_seed, "base seed")->default_val(1);
    table2->add_option("--decoder", table2_opt.decoder, "decoder to exercise")
        ->check(CLI::IsMember({"gc", "vt", "naive"}))
        ->default_val("gc");
    table2->add_option("--mode", table2_opt.mode, "pattern selection per trial")
        ->check(CLI::IsMember({"uniform", "adversarial"}))
        ->default_val("uniform");
    table2->add_option("--threads", table2_opt.config.threads,
                       "worker threads, 0 for hardware concurrency")
        ->default_val(0);
    table2->add_option("--output", table2_opt.output, "CSV file, - for stdout");

    SweepOptions compare_opt;
    compare_opt.config.delta_list = {2};
    CLI::App* compare = app.add_subcommand(
        "compare", "run the block decoder and the VT baseline side by side");
    compare->add_option("--k", compare_opt.config.k_list, "message lengths")->delimiter(',');
    compare->add_option("--delta", compare_opt.config.delta_list, "deletion counts")
        ->delimiter(',');
    compare->add_option("--trials", compare_opt.config.trials, "trials per cell")
        ->default_val(10000);
    compare->add_option("--seed", compare_opt.config.base_seed, "base seed")->default_val(1);
    compare->add_option("--threads", compare_opt.config.threads,
                        "worker threads, 0 for hardware concurrency")
        ->default_val(0);
    compare->add_option("--output", compare_opt.output, "CSV file, - for stdout");

    AdversarialOptions adv_opt;
    CLI::App* adversarial = app.add_subcommand(
        "adversarial", "exact worst-case list size per message, every pattern tried");
    adversarial->add_option("--k", adv_opt.codec.k, "message length")->required();
    adversarial->add_option("--ell", adv_opt.codec.ell,
                            "block width (default: max(1, ceil(log2 k)))");
    adversarial->add_option("--c", adv_opt.codec.c, "parity symbols (default: delta + 1)");
    adversarial->add_option("--delta", adv_opt.codec.delta, "deletions to correct")
        ->default_val(1);
    adversarial->add_option("--max-n", adv_opt.max_n, "refuse codewords longer than this")
        ->default_val(24);
    adversarial->add_option("--input", adv_opt.codec.input, "message file, - for stdin");
    adversarial->add_option("--output", adv_opt.codec.output, "output file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help is not an error
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage errors share one exit code
    }

    try {
        if (encode->parsed()) return cmd_encode(encode_opt);
        if (corrupt->parsed()) return cmd_corrupt(corrupt_opt);
        if (decode->parsed()) return cmd_decode(decode_opt);
        if (table2->parsed()) return cmd_table2(table2_opt);
        if (compare->parsed()) return cmd_compare(compare_opt);
        if (adversarial->parsed()) return cmd_adversarial(adv_opt);
    } catch (const gc::DecodeError& e) {
        std::cerr << "decode error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
