#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tuplecode/codebook.hpp"
#include "tuplecode/config.hpp"
#include "tuplecode/decoder.hpp"
#include "tuplecode/kernels.hpp"
#include "tuplecode/metrics.hpp"
#include "tuplecode/sweep.hpp"

namespace {

using namespace tuplecode;

std::vector<int> parse_ordinal_list(const std::string& text) {
    std::vector<int> ordinals;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ','))
        if (!part.empty()) ordinals.push_back(std::stoi(part));
    return ordinals;
}

int cmd_run(const std::string& config_path, int test_override, const std::string& out_path,
            std::uint64_t seed, bool seed_given) {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (test_override == 1) cfg.test_id = TestId::test1;
    else if (test_override == 2) cfg.test_id = TestId::test2;
    else if (test_override == 3) cfg.test_id = TestId::test3;
    if (seed_given) cfg.master_seed = seed;

    const std::vector<std::string> violations = validate_config(cfg);
    if (!violations.empty()) {
        for (const std::string& v : violations) std::cerr << "config error: " << v << "\n";
        return 2;
    }

    std::cerr << "[tuplecode] " << test_id_name(cfg.test_id) << ", seed " << cfg.master_seed
              << ", kernel " << kernels::active_kernel() << "\n";
    const SweepResult result = run_experiment(cfg);
    emit_csv(result, out_path);
    std::cerr << "[tuplecode] " << result.records.size() << " records -> " << out_path
              << " (provenance " << result.provenance << ")\n";
    return 0;
}

int cmd_decode(const std::string& codebook_path, const std::string& classifiers_arg, int n,
               int N) {
    const Codebook cb = load_codebook(codebook_path);
    if (cb.n != n) {
        std::cerr << "error: codebook file has n=" << cb.n << " but --n is " << n << "\n";
        return 2;
    }

    ClassifierSet cls = enumerate_index_sets(n, N);
    if (classifiers_arg != "max") {
        cls = prune_classifiers(cls, parse_ordinal_list(classifiers_arg));
        const std::vector<int> uncovered = cls.uncovered_positions();
        if (!uncovered.empty())
            std::cerr << "warning: pruned set leaves position " << uncovered.front()
                      << " uncovered\n";
    }

    std::string text, chunk;
    while (std::cin >> chunk) text += chunk;
    BitStream received;
    received.origin = StreamOrigin::received;
    received.bits = parse_bits(text);
    if (received.size() % static_cast<std::size_t>(n) != 0) {
        std::cerr << "error: input length " << received.size() << " is not divisible by n=" << n
                  << "\n";
        return 2;
    }

    const NeuralDecoder decoder(cb, cls);
    const auto [decoded, decisions] = decoder.decode_message(received);
    std::cout << format_bits(decoded.bits) << "\n";

    const auto groups = split_groups(received.bits, n);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const VoteTally tally = decoder.vote(groups[g]);
        std::cout << "# group " << (g + 1) << ": votes=";
        for (int j = 0; j < tally.size(); ++j) std::cout << (j ? "," : "") << tally.votes[j];
        const GroupDecision& d = decisions[g];
        std::cout << " winner=codeword" << (d.winner + 1) << " confidence=" << d.confidence;
        if (d.tie) std::cout << " tie";
        if (d.undecided) std::cout << " undecided";
        std::cout << "\n";
    }
    return 0;
}

int cmd_memory(int n, int N, int C, int m) {
    const Rational bytes = memory_bytes(N, C, m, n);
    std::cout << bytes.str();
    if (!bytes.is_integer()) std::cout << " (" << bytes.to_double() << ")";
    std::cout << " bytes\n";
    return 0;
}

int cmd_codebook(int n, int C, std::uint64_t seed, const std::string& out_path) {
    const Codebook cb = generate_codebook(n, C, seed);
    if (out_path.empty() || out_path == "-")
        std::cout << codebook_to_text(cb);
    else
        save_codebook(cb, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"N-tuple binary neural network decoder and RID-channel BER sweeps"};
    app.require_subcommand(1);

    // run
    std::string config_path, out_path = "sweep.csv";
    int test_override = 0;
    std::uint64_t seed = 1;
    auto* run = app.add_subcommand("run", "Run a parameter sweep and write a CSV");
    run->add_option("--test", test_override, "Test to run: 1, 2 or 3 (overrides the config)")
        ->check(CLI::Range(1, 3));
    run->add_option("--config", config_path, "Experiment config file (flat key = value)");
    run->add_option("--out", out_path, "Output CSV path");
    auto* seed_opt = run->add_option("--seed", seed, "Master seed (overrides the config)");

    // decode
    std::string codebook_path, classifiers_arg = "max";
    int dn = 0, dN = 0;
    auto* decode = app.add_subcommand("decode", "Decode a 0/1 bitstring read from stdin");
    decode->add_option("--codebook", codebook_path, "Codebook file")->required();
    decode->add_option("--classifiers", classifiers_arg,
                       "'max' or comma-separated removal ordinals");
    decode->add_option("--n", dn, "Codeword length")->required();
    decode->add_option("--N", dN, "Tuple length")->required();

    // memory
    int mn = 0, mN = 0, mC = 0, mm = 0;
    auto* memory = app.add_subcommand("memory", "Print the decoder memory model value");
    memory->add_option("--n", mn, "Codeword length")->required();
    memory->add_option("--N", mN, "Tuple length")->required();
    memory->add_option("--C", mC, "Codeword count")->required();
    memory->add_option("--m", mm, "Classifier count")->required();

    // codebook
    int gn = 0, gC = 4;
    std::uint64_t gseed = 1;
    std::string gout;
    auto* codebook = app.add_subcommand("codebook", "Generate a codebook file");
    codebook->add_option("--n", gn, "Codeword length")->required();
    codebook->add_option("--C", gC, "Codeword count");
    codebook->add_option("--seed", gseed, "Generator seed");
    codebook->add_option("--out", gout, "Output path ('-' or empty for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(config_path, test_override, out_path, seed, seed_opt->count() > 0);
        if (decode->parsed()) return cmd_decode(codebook_path, classifiers_arg, dn, dN);
        if (memory->parsed()) return cmd_memory(mn, mN, mC, mm);
        if (codebook->parsed()) return cmd_codebook(gn, gC, gseed, gout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
