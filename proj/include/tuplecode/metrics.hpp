#pragma once

#include <span>
#include <string>
#include <vector>

#include "tuplecode/bits.hpp"

namespace tuplecode {

/// Fraction of positions where decoded differs from sent. Compared against
/// the encoded stream, not the channel output. Throws on length mismatch or
/// empty streams.
double bit_error_rate(const BitStream& sent, const BitStream& decoded);

/// Exact reduced fraction; den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }
    std::string str() const; // "56" or "1760/3"
    bool operator==(const Rational&) const = default;
};

/// Decoder memory model, (2^N * C * m) / n bytes, reported exactly. A model,
/// not a measurement.
Rational memory_bytes(int N, int C, int m, int n);

struct IterationStats {
    double ber = 0.0;
    long long inversions = 0;
    int undecided_groups = 0;
    int tie_groups = 0;
};

/// One sweep point: decoder parameters, channel probability and the
/// iteration-aggregated statistics.
struct BerRecord {
    int n = 0;
    int N = 0;
    int m = 0;
    int C = 0;
    double probability = 0.0;
    int iterations = 0;
    double ber = 0.0;
    long long total_inversions = 0;
    double avg_inversions = 0.0;
    long long undecided_groups = 0;
    long long tie_groups = 0;
};

/// Mean BER, summed inversion/flag counts and their per-iteration average.
/// Throws on an empty list.
BerRecord aggregate_iterations(int n, int N, int m, int C, double probability,
                               std::span<const IterationStats> per_iteration);

} // namespace tuplecode
