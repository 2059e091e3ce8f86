#include "tuplecode/metrics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "tuplecode/kernels.hpp"

namespace tuplecode {

double bit_error_rate(const BitStream& sent, const BitStream& decoded) {
    if (sent.size() != decoded.size())
        throw std::invalid_argument("bit_error_rate requires equal lengths (got " +
                                    std::to_string(sent.size()) + " vs " +
                                    std::to_string(decoded.size()) + ")");
    if (sent.empty()) throw std::invalid_argument("bit_error_rate on empty streams");
    const std::size_t errors =
        kernels::mismatch_count(sent.bits.data(), decoded.bits.data(), sent.size());
    return static_cast<double>(errors) / static_cast<double>(sent.size());
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational memory_bytes(int N, int C, int m, int n) {
    if (N <= 0 || C <= 0 || m <= 0) throw std::invalid_argument("memory_bytes needs positive N, C, m");
    if (n <= 0) throw std::invalid_argument("memory_bytes needs positive n");
    if (N > 40) throw std::invalid_argument("memory_bytes supports N <= 40");

    long long num = (1ll << N) * C * m;
    long long den = n;
    const long long g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

BerRecord aggregate_iterations(int n, int N, int m, int C, double probability,
                               std::span<const IterationStats> per_iteration) {
    if (per_iteration.empty())
        throw std::invalid_argument("aggregate_iterations on an empty iteration list");

    BerRecord rec;
    rec.n = n;
    rec.N = N;
    rec.m = m;
    rec.C = C;
    rec.probability = probability;
    rec.iterations = static_cast<int>(per_iteration.size());

    double ber_sum = 0.0;
    for (const IterationStats& it : per_iteration) {
        ber_sum += it.ber;
        rec.total_inversions += it.inversions;
        rec.undecided_groups += it.undecided_groups;
        rec.tie_groups += it.tie_groups;
    }
    rec.ber = ber_sum / static_cast<double>(rec.iterations);
    rec.avg_inversions =
        static_cast<double>(rec.total_inversions) / static_cast<double>(rec.iterations);
    return rec;
}

} // namespace tuplecode
