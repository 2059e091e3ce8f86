#include "tuplecode/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tuplecode/channel.hpp"
#include "tuplecode/decoder.hpp"
#include "tuplecode/rng.hpp"

namespace tuplecode {

std::vector<int> test2_removals(int tuple_bits, Test2Group group) {
    // Cumulative removal schedules for the n = 8 classifier-reduction sweeps.
    // The 3-bit Group D list is emended in one place: its published duplicate
    // of ordinal 14 (already removed at Group C) is read as 44, which restores
    // the stated group size of 14 retained classifiers.
    static const std::vector<int> two_a = {2, 9, 15, 20, 24, 27};
    static const std::vector<int> two_b = {2, 9, 15, 20, 24, 27, 7, 13, 16, 19, 5, 18};
    static const std::vector<int> two_c = {2, 9,  15, 20, 24, 27, 7,  13, 16,
                                           19, 5, 18, 3,  10, 14, 23, 28};
    static const std::vector<int> two_d = {2,  9, 15, 20, 24, 27, 7,  13, 16, 19, 5,
                                           18, 3, 10, 14, 23, 28, 21, 6,  11, 25, 8};
    static const std::vector<int> three_a = {8,  28, 42, 51, 17, 20, 10,
                                             30, 2,  27, 31, 34, 36, 13};
    static const std::vector<int> three_b = {8,  28, 42, 51, 17, 20, 10, 30, 2,  27, 31, 34, 36,
                                             13, 4,  7,  15, 19, 25, 32, 38, 41, 47, 50, 54, 9,
                                             24};
    static const std::vector<int> three_c = {8,  28, 42, 51, 17, 20, 10, 30, 2,  27, 31,
                                             34, 36, 13, 4,  7,  15, 19, 25, 32, 38, 41,
                                             47, 50, 54, 9,  24, 37, 56, 52, 40, 14, 33};
    static const std::vector<int> three_d = {8,  28, 42, 51, 17, 20, 10, 30, 2,  27, 31, 34, 36,
                                             13, 4,  7,  15, 19, 25, 32, 38, 41, 47, 50, 54, 9,
                                             24, 37, 56, 52, 40, 14, 33, 44, 45, 3,  21, 48, 23,
                                             16, 55, 6};

    if (tuple_bits == 2) {
        switch (group) {
            case Test2Group::A: return two_a;
            case Test2Group::B: return two_b;
            case Test2Group::C: return two_c;
            case Test2Group::D: return two_d;
        }
    } else if (tuple_bits == 3) {
        switch (group) {
            case Test2Group::A: return three_a;
            case Test2Group::B: return three_b;
            case Test2Group::C: return three_c;
            case Test2Group::D: return three_d;
        }
    }
    throw std::invalid_argument("test2_removals is defined for tuple lengths 2 and 3");
}

std::vector<IterationStats> sweep_point(const Codebook& cb, const ClassifierSet& cls,
                                        const PointParams& pp) {
    const NeuralDecoder decoder(cb, cls);
    const auto n = static_cast<std::uint64_t>(cb.n);
    const ChannelParams params = ChannelParams::inversion_only(pp.p_inv);

    BitStream encoded;
    if (!pp.reencode_each_iteration)
        encoded = encode_message(cb, static_cast<std::size_t>(pp.message_bits),
                                 derive_seed(pp.master_seed, seed_role::encode + (n << 8), 0, 0));

    std::vector<IterationStats> stats;
    stats.reserve(static_cast<std::size_t>(pp.iterations));
    for (int t = 0; t < pp.iterations; ++t) {
        if (pp.reencode_each_iteration)
            encoded = encode_message(
                cb, static_cast<std::size_t>(pp.message_bits),
                derive_seed(pp.master_seed, seed_role::encode + (n << 8), 0,
                            static_cast<std::uint64_t>(t)));

        const std::uint64_t channel_seed =
            derive_seed(pp.master_seed, seed_role::channel + (n << 8), pp.point_index,
                        static_cast<std::uint64_t>(t));
        auto [received, log] = transmit(encoded, params, channel_seed);
        auto [decoded, decisions] = decoder.decode_message(received);

        IterationStats it;
        it.ber = bit_error_rate(encoded, decoded);
        it.inversions = static_cast<long long>(log.inversions());
        for (const GroupDecision& d : decisions) {
            it.undecided_groups += d.undecided ? 1 : 0;
            it.tie_groups += d.tie ? 1 : 0;
        }
        stats.push_back(it);
    }
    return stats;
}

Codebook resolve_codebook(const ExperimentConfig& cfg, int n) {
    if (!cfg.codebook_source.file.empty()) {
        Codebook cb = load_codebook(cfg.codebook_source.file);
        if (cb.n != n)
            throw std::runtime_error("codebook file " + cfg.codebook_source.file + " has n=" +
                                     std::to_string(cb.n) + " but the sweep needs n=" +
                                     std::to_string(n));
        const ValidationReport report = validate_codebook(cb);
        if (!report.ok())
            throw std::runtime_error("codebook file " + cfg.codebook_source.file +
                                     " is invalid: " + report.violations.front());
        return cb;
    }
    // All sweeps are defined over four-codeword codebooks.
    return generate_codebook(n, 4,
                             derive_seed(cfg.codebook_source.seed, seed_role::codebook,
                                         static_cast<std::uint64_t>(n)));
}

namespace {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (static_cast<std::size_t>(threads) > count) threads = static_cast<unsigned>(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct Cell {
    Codebook cb;
    ClassifierSet cls;
};

// One cell = one decoder; its grid points run in parallel and land in fixed
// slots, so the merged record order never depends on scheduling.
void sweep_cell(const Cell& cell, const ExperimentConfig& cfg,
                const std::vector<double>& grid, std::vector<BerRecord>& records) {
    const std::size_t base = records.size();
    records.resize(base + grid.size());
    parallel_for(grid.size(), [&](std::size_t q) {
        PointParams pp;
        pp.p_inv = grid[q];
        pp.iterations = cfg.iterations;
        pp.message_bits = cfg.message_bits;
        pp.master_seed = cfg.master_seed;
        pp.point_index = q;
        pp.reencode_each_iteration = cfg.reencode_each_iteration;
        const std::vector<IterationStats> stats = sweep_point(cell.cb, cell.cls, pp);
        records[base + q] = aggregate_iterations(cell.cb.n, cell.cls.N, cell.cls.size(),
                                                 cell.cb.size(), grid[q], stats);
    });
    std::cerr << "[tuplecode] swept n=" << cell.cb.n << " N=" << cell.cls.N
              << " m=" << cell.cls.size() << " (" << grid.size() << " points)\n";
}

std::vector<double> effective_grid(const ExperimentConfig& cfg) {
    return cfg.probability_grid.empty() ? default_probability_grid() : cfg.probability_grid;
}

void sort_records(std::vector<BerRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const BerRecord& a, const BerRecord& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.N != b.N) return a.N < b.N;
        if (a.m != b.m) return a.m < b.m;
        return a.probability < b.probability;
    });
}

std::string fingerprint(const ExperimentConfig& cfg) {
    const std::string text = config_to_text(cfg);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%016llx-seed%llu", static_cast<unsigned long long>(mix64(h)),
                  static_cast<unsigned long long>(cfg.master_seed));
    return buf;
}

void require_valid(const ExperimentConfig& cfg) {
    const std::vector<std::string> violations = validate_config(cfg);
    if (!violations.empty()) throw std::invalid_argument("invalid config: " + violations.front());
}

SweepResult finish(const ExperimentConfig& cfg, std::vector<BerRecord> records) {
    sort_records(records);
    return SweepResult{std::move(records), fingerprint(cfg)};
}

} // namespace

SweepResult run_test1(const ExperimentConfig& cfg) {
    require_valid(cfg);
    const std::vector<double> grid = effective_grid(cfg);
    const std::vector<int> lengths =
        cfg.codeword_lengths.empty() ? std::vector<int>{3, 4, 5, 6, 7, 8} : cfg.codeword_lengths;

    std::vector<BerRecord> records;
    for (int n : lengths) {
        const Codebook cb = resolve_codebook(cfg, n);
        std::vector<int> tuples;
        if (cfg.tuple_lengths.empty())
            for (int N = 2; N <= n; ++N) tuples.push_back(N);
        else
            tuples = cfg.tuple_lengths;
        for (int N : tuples)
            sweep_cell(Cell{cb, enumerate_index_sets(n, N)}, cfg, grid, records);
    }
    return finish(cfg, std::move(records));
}

SweepResult run_test2(const ExperimentConfig& cfg) {
    require_valid(cfg);
    const std::vector<double> grid = effective_grid(cfg);
    const Codebook cb = resolve_codebook(cfg, 8);
    const std::vector<int> tuples =
        cfg.tuple_lengths.empty() ? std::vector<int>{2, 3} : cfg.tuple_lengths;

    std::vector<BerRecord> records;
    for (int N : tuples) {
        if (N != 2 && N != 3)
            throw std::invalid_argument("test2 is defined for tuple lengths 2 and 3");
        const ClassifierSet full = enumerate_index_sets(8, N);
        sweep_cell(Cell{cb, full}, cfg, grid, records);
        for (Test2Group g : {Test2Group::A, Test2Group::B, Test2Group::C, Test2Group::D}) {
            const std::vector<int> removals = test2_removals(N, g);
            const ClassifierSet pruned = prune_classifiers(full, removals);
            const std::vector<int> uncovered = pruned.uncovered_positions();
            if (!uncovered.empty())
                throw std::runtime_error("test2 pruned set lost coverage of position " +
                                         std::to_string(uncovered.front()));
            sweep_cell(Cell{cb, pruned}, cfg, grid, records);
        }
    }
    return finish(cfg, std::move(records));
}

SweepResult run_test3(const ExperimentConfig& cfg) {
    require_valid(cfg);
    const std::vector<double> grid = effective_grid(cfg);
    std::vector<BerRecord> records;
    for (int n : {8, 12})
        sweep_cell(Cell{resolve_codebook(cfg, n), enumerate_index_sets(n, 3)}, cfg, grid,
                   records);
    return finish(cfg, std::move(records));
}

SweepResult run_custom(const ExperimentConfig& cfg) {
    require_valid(cfg);
    const std::vector<double> grid = effective_grid(cfg);

    std::vector<BerRecord> records;
    for (int n : cfg.codeword_lengths) {
        const Codebook cb = resolve_codebook(cfg, n);
        std::vector<int> tuples;
        if (cfg.tuple_lengths.empty())
            for (int N = 2; N <= n; ++N) tuples.push_back(N);
        else
            tuples = cfg.tuple_lengths;
        for (int N : tuples) {
            ClassifierSet cls = enumerate_index_sets(n, N);
            if (!cfg.classifier_spec.max) {
                cls = prune_classifiers(cls, cfg.classifier_spec.removed_ordinals);
                const std::vector<int> uncovered = cls.uncovered_positions();
                if (!uncovered.empty())
                    throw std::runtime_error("pruned classifier set lost coverage of position " +
                                             std::to_string(uncovered.front()));
            }
            sweep_cell(Cell{cb, cls}, cfg, grid, records);
        }
    }
    return finish(cfg, std::move(records));
}

SweepResult run_experiment(const ExperimentConfig& cfg) {
    switch (cfg.test_id) {
        case TestId::test1: return run_test1(cfg);
        case TestId::test2: return run_test2(cfg);
        case TestId::test3: return run_test3(cfg);
        case TestId::custom: return run_custom(cfg);
    }
    throw std::logic_error("unreachable test id");
}

namespace {

std::string shortest_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

} // namespace

std::string format_csv(const SweepResult& result) {
    std::string out = "n,N,m,C,probability,iterations,ber,total_inversions,avg_inversions,"
                      "undecided,ties\n";
    for (const BerRecord& r : result.records) {
        out += std::to_string(r.n) + ',' + std::to_string(r.N) + ',' + std::to_string(r.m) + ',' +
               std::to_string(r.C) + ',' + shortest_double(r.probability) + ',' +
               std::to_string(r.iterations) + ',' + shortest_double(r.ber) + ',' +
               std::to_string(r.total_inversions) + ',' + shortest_double(r.avg_inversions) +
               ',' + std::to_string(r.undecided_groups) + ',' + std::to_string(r.tie_groups) +
               '\n';
    }
    return out;
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write CSV file: " + path);
    out << format_csv(result);
    if (!out) throw std::runtime_error("failed writing CSV file: " + path);
}

std::vector<BerRecord> parse_csv(std::string_view text) {
    std::vector<BerRecord> records;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        while (true) {
            const std::size_t comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != 11) throw std::invalid_argument("CSV row with wrong field count");

        auto to_ll = [](std::string_view s) {
            long long v = 0;
            const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size())
                throw std::invalid_argument("bad CSV integer: " + std::string(s));
            return v;
        };
        auto to_d = [](std::string_view s) {
            double v = 0;
            const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size())
                throw std::invalid_argument("bad CSV number: " + std::string(s));
            return v;
        };

        BerRecord r;
        r.n = static_cast<int>(to_ll(fields[0]));
        r.N = static_cast<int>(to_ll(fields[1]));
        r.m = static_cast<int>(to_ll(fields[2]));
        r.C = static_cast<int>(to_ll(fields[3]));
        r.probability = to_d(fields[4]);
        r.iterations = static_cast<int>(to_ll(fields[5]));
        r.ber = to_d(fields[6]);
        r.total_inversions = to_ll(fields[7]);
        r.avg_inversions = to_d(fields[8]);
        r.undecided_groups = to_ll(fields[9]);
        r.tie_groups = to_ll(fields[10]);
        records.push_back(r);
    }
    return records;
}

} // namespace tuplecode
