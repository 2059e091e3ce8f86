#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tuplecode {

enum class TestId { test1, test2, test3, custom };

const char* test_id_name(TestId id);

/// `max` keeps the full enumeration; otherwise the listed ordinals are
/// removed from it.
struct ClassifierSpec {
    bool max = true;
    std::vector<int> removed_ordinals;
};

/// A codebook comes from a file when `file` is set, otherwise from the
/// deterministic generator (per codeword length, derived from `seed`).
struct CodebookSource {
    std::string file;
    std::uint64_t seed = 1;
};

struct ExperimentConfig {
    TestId test_id = TestId::test1;
    int message_bits = 1680;
    int iterations = 10;
    std::vector<double> probability_grid; // empty -> default grid
    std::vector<int> codeword_lengths;    // empty -> per-test default
    std::vector<int> tuple_lengths;       // empty -> all valid N per n
    ClassifierSpec classifier_spec;
    CodebookSource codebook_source;
    std::uint64_t master_seed = 1;
    bool reencode_each_iteration = false; // default re-transmits the same encoded message
};

/// The 19 inversion probabilities of the standard sweep plus 0.002, sorted
/// ascending.
std::vector<double> default_probability_grid();

/// Flat key = value text, '#' comments. Keys: test, message_bits, iterations,
/// probabilities, codeword_lengths, tuple_lengths (list or "all-valid"),
/// classifiers ("max" or "remove:<ordinals>"), codebook_file, codebook_seed,
/// seed, reencode. Unknown keys are errors.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_text(const ExperimentConfig& cfg);

/// Invariant check: message_bits divisible by every configured n, every
/// (n, N) pair with 1 < N <= n and n > 2, probabilities in [0,1],
/// iterations >= 1. Empty result means valid.
std::vector<std::string> validate_config(const ExperimentConfig& cfg);

} // namespace tuplecode
