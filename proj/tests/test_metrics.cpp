#include "doctest.h"

#include <stdexcept>

#include "tuplecode/metrics.hpp"

using namespace tuplecode;

namespace {

BitStream stream_of(const char* text) {
    BitStream s;
    s.bits = parse_bits(text);
    return s;
}

} // namespace

TEST_CASE("bit error rate basics") {
    const BitStream a = stream_of("10110010");
    CHECK(bit_error_rate(a, a) == 0.0);
    CHECK(bit_error_rate(a, stream_of("01001101")) == 1.0);
    CHECK(bit_error_rate(a, stream_of("10110011")) == doctest::Approx(1.0 / 8.0));

    BitStream sent, decoded;
    sent.bits.assign(1680, 0);
    decoded.bits.assign(1680, 0);
    decoded.bits[997] = 1;
    CHECK(bit_error_rate(sent, decoded) == doctest::Approx(1.0 / 1680.0));

    CHECK_THROWS_AS(bit_error_rate(a, stream_of("1011")), std::invalid_argument);
    CHECK_THROWS_AS(bit_error_rate(BitStream{}, BitStream{}), std::invalid_argument);
}

TEST_CASE("bit error rate is symmetric") {
    const BitStream a = stream_of("110010101100");
    const BitStream b = stream_of("010010111100");
    CHECK(bit_error_rate(a, b) == bit_error_rate(b, a));
}

TEST_CASE("memory model values") {
    CHECK(memory_bytes(2, 4, 28, 8) == Rational{56, 1});
    CHECK(memory_bytes(3, 4, 56, 8) == Rational{224, 1});
    CHECK(memory_bytes(2, 1, 1, 4) == Rational{1, 1});
    CHECK(memory_bytes(3, 4, 220, 12) == Rational{1760, 3});
    CHECK(memory_bytes(3, 4, 220, 12).str() == "1760/3");
    CHECK(memory_bytes(3, 4, 220, 12).to_double() == doctest::Approx(586.6667).epsilon(1e-4));
    CHECK(memory_bytes(2, 4, 28, 8).str() == "56");
    CHECK_THROWS_AS(memory_bytes(2, 4, 28, 0), std::invalid_argument);
    CHECK_THROWS_AS(memory_bytes(0, 4, 28, 8), std::invalid_argument);
}

TEST_CASE("memory model is monotone in N, C, m and antitone in n") {
    const double base = memory_bytes(3, 4, 28, 8).to_double();
    CHECK(memory_bytes(4, 4, 28, 8).to_double() > base);
    CHECK(memory_bytes(3, 5, 28, 8).to_double() > base);
    CHECK(memory_bytes(3, 4, 29, 8).to_double() > base);
    CHECK(memory_bytes(3, 4, 28, 9).to_double() < base);
}

TEST_CASE("aggregation over iterations") {
    const IterationStats one{0.125, 21, 2, 3};
    const BerRecord echo = aggregate_iterations(8, 2, 28, 4, 0.1, std::vector{one});
    CHECK(echo.ber == 0.125);
    CHECK(echo.total_inversions == 21);
    CHECK(echo.avg_inversions == 21.0);
    CHECK(echo.iterations == 1);
    CHECK(echo.undecided_groups == 2);
    CHECK(echo.tie_groups == 3);
    CHECK(echo.n == 8);
    CHECK(echo.N == 2);
    CHECK(echo.m == 28);
    CHECK(echo.C == 4);
    CHECK(echo.probability == 0.1);

    const std::vector<IterationStats> extremes{{0.0, 0, 0, 0}, {1.0, 0, 0, 0}};
    CHECK(aggregate_iterations(8, 2, 28, 4, 0.5, extremes).ber == 0.5);

    // Ten iterations, 147 inversions in total -> average 14.7 per iteration.
    std::vector<IterationStats> ten(10);
    const long long counts[10] = {15, 14, 16, 13, 15, 14, 15, 14, 16, 15};
    for (int i = 0; i < 10; ++i) {
        ten[static_cast<std::size_t>(i)].ber = 0.01 * i;
        ten[static_cast<std::size_t>(i)].inversions = counts[i];
    }
    const BerRecord rec = aggregate_iterations(8, 3, 56, 4, 0.001, ten);
    CHECK(rec.total_inversions == 147);
    CHECK(rec.avg_inversions == doctest::Approx(14.7));
    CHECK(rec.ber >= 0.0);
    CHECK(rec.ber <= 0.09);

    CHECK_THROWS_AS(aggregate_iterations(8, 2, 28, 4, 0.1, std::vector<IterationStats>{}),
                    std::invalid_argument);
}

TEST_CASE("aggregate mean lies within the per-iteration range") {
    std::vector<IterationStats> iters;
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double ber = 0.13 * i / 7.0;
        iters.push_back({ber, i, 0, 0});
        lo = std::min(lo, ber);
        hi = std::max(hi, ber);
    }
    const BerRecord rec = aggregate_iterations(5, 2, 10, 4, 0.2, iters);
    CHECK(rec.ber >= lo);
    CHECK(rec.ber <= hi);
}
