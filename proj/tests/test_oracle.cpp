#include "doctest.h"

#include <stdexcept>

#include "tuplecode/oracle.hpp"

using namespace tuplecode;

TEST_CASE("min_hamming_decode on the two-codeword worked group") {
    Codebook cb;
    cb.n = 7;
    cb.words = {parse_bits("1001101"), parse_bits("0001101")};
    const auto d = oracle::min_hamming_decode(parse_bits("0001111"), cb);
    CHECK(d.distances == std::vector<int>{2, 1});
    CHECK(d.minimizers == std::vector<int>{1});
}

TEST_CASE("a codeword is its own unique nearest neighbour at distance 0") {
    Codebook cb;
    cb.n = 5;
    cb.words = {parse_bits("10010"), parse_bits("01101"), parse_bits("11111")};
    const auto d = oracle::min_hamming_decode(parse_bits("01101"), cb);
    CHECK(d.minimizers == std::vector<int>{1});
    CHECK(d.distances[1] == 0);
}

TEST_CASE("distances for the 7-bit component-test group") {
    Codebook cb;
    cb.n = 7;
    cb.words = {parse_bits("0001101"), parse_bits("0010011"), parse_bits("0010100"),
                parse_bits("0100010")};
    const auto d = oracle::min_hamming_decode(parse_bits("0111101"), cb);
    CHECK(d.distances == std::vector<int>{2, 4, 3, 5});
    CHECK(d.minimizers == std::vector<int>{0});
    CHECK_THROWS_AS(oracle::min_hamming_decode(parse_bits("011"), cb), std::invalid_argument);
}

TEST_CASE("closed-form votes") {
    CHECK(oracle::closed_form_votes(5, 2) == 10);
    CHECK(oracle::closed_form_votes(3, 3) == 1);
    CHECK(oracle::closed_form_votes(1, 2) == 0);
    CHECK(oracle::closed_form_votes(0, 2) == 0);
    CHECK(oracle::closed_form_votes(8, 2) == 28);
    CHECK(oracle::closed_form_votes(12, 3) == 220);
}

TEST_CASE("closed form agrees with direct subset enumeration") {
    // Independent check: count N-subsets of k agreeing positions by walking
    // bitmasks.
    for (int k = 0; k <= 10; ++k)
        for (int N = 2; N <= 6; ++N) {
            long long count = 0;
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                int bits = 0;
                for (int i = 0; i < k; ++i) bits += (mask >> i) & 1u;
                if (bits == N) ++count;
            }
            CHECK(oracle::closed_form_votes(k, N) == count);
        }
}
