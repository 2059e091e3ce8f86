#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tuplecode/codebook.hpp"
#include "tuplecode/config.hpp"
#include "tuplecode/index_set.hpp"
#include "tuplecode/metrics.hpp"

namespace tuplecode {

struct SweepResult {
    std::vector<BerRecord> records; // sorted by (n, N, m, probability)
    std::string provenance;         // config fingerprint + master seed, hex
};

enum class Test2Group { A, B, C, D };

/// Cumulative removal ordinal lists for the classifier-reduction sweeps at
/// n = 8: groups remove 6/12/17/22 of the 28 two-bit arrangements and
/// 14/27/33/42 of the 56 three-bit arrangements.
std::vector<int> test2_removals(int tuple_bits, Test2Group group);

/// Per-point Monte Carlo: encode (seeded), corrupt at p_inv (seed derived
/// from (master, n, point, iteration)), decode, score one IterationStats per
/// iteration. Pure given its arguments; safe to call from parallel workers.
struct PointParams {
    double p_inv = 0.0;
    int iterations = 1;
    int message_bits = 1680;
    std::uint64_t master_seed = 1;
    std::uint64_t point_index = 0; // probability index q in the grid
    bool reencode_each_iteration = false;
};

std::vector<IterationStats> sweep_point(const Codebook& cb, const ClassifierSet& cls,
                                        const PointParams& pp);

/// Codebook for codeword length n under this config: loaded from file when
/// configured, else generated with a seed derived from (source seed, n).
Codebook resolve_codebook(const ExperimentConfig& cfg, int n);

/// Test 1: full-classifier sweep over every valid (n, N) cell (default
/// n = 3..8, 2 <= N <= n — the 27 ticked cells) and the probability grid.
SweepResult run_test1(const ExperimentConfig& cfg);

/// Test 2: n = 8, N in {2, 3}; the maximum set plus pruned Groups A-D from
/// the cumulative removal lists, sizes reported from the retained sets.
SweepResult run_test2(const ExperimentConfig& cfg);

/// Test 3: paired full-classifier sweeps for (8, 3) and (12, 3) on the same
/// grid and master seed.
SweepResult run_test3(const ExperimentConfig& cfg);

/// The configured lengths/tuples/classifier spec verbatim.
SweepResult run_custom(const ExperimentConfig& cfg);

SweepResult run_experiment(const ExperimentConfig& cfg);

/// CSV header n,N,m,C,probability,iterations,ber,total_inversions,
/// avg_inversions,undecided,ties; one row per record, sorted; doubles in
/// shortest round-trip form.
std::string format_csv(const SweepResult& result);
void emit_csv(const SweepResult& result, const std::string& path);
std::vector<BerRecord> parse_csv(std::string_view text);

} // namespace tuplecode
