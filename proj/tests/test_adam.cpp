#include "doctest.h"

#include <stdexcept>

#include "tuplecode/adam.hpp"
#include "tuplecode/rng.hpp"

using namespace tuplecode;

TEST_CASE("training stores nothing for an all-zero input") {
    CorrelationMatrix m(4, 5);
    m.train(parse_bits("0000"), parse_bits("11111"));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 5; ++c) CHECK(m.at(r, c) == 0);
}

TEST_CASE("a single (e_r, e_c) pair sets exactly one weight") {
    CorrelationMatrix m(3, 4);
    m.train(parse_bits("010"), parse_bits("0010"));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) CHECK(m.at(r, c) == ((r == 1 && c == 2) ? 1 : 0));
}

TEST_CASE("training the same pair twice equals training once") {
    CorrelationMatrix once(4, 4), twice(4, 4);
    const BitVec a = parse_bits("1010");
    const BitVec b = parse_bits("0110");
    once.train(a, b);
    twice.train(a, b);
    twice.train(a, b);
    CHECK(once.to_text() == twice.to_text());
}

TEST_CASE("recall reproduces the worked summed/thresholded class") {
    // Reconstructed fixture: one stored pair with a three-hot input and class
    // [1 1 1 0 1] makes the recall sum to popcount(input) times the class.
    CorrelationMatrix m(4, 5);
    m.train(parse_bits("1110"), parse_bits("11101"));
    const ClassVector cv = recall(m, parse_bits("1110"));
    CHECK(cv.summed == std::vector<int>{3, 3, 3, 0, 3});
    CHECK(cv.thresholded == parse_bits("11101"));
}

TEST_CASE("recall of a zero probe sums to zero and thresholds to zero") {
    CorrelationMatrix m(4, 5);
    m.train(parse_bits("1110"), parse_bits("11101"));
    const ClassVector cv = recall(m, parse_bits("0000"));
    CHECK(cv.summed == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(cv.thresholded == parse_bits("00000"));
}

TEST_CASE("single-pair recall equals popcount(input) times the output pattern") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = 2 + static_cast<int>(rng.next_below(8));
        const int cols = 2 + static_cast<int>(rng.next_below(8));
        BitVec a(static_cast<std::size_t>(rows)), b(static_cast<std::size_t>(cols));
        for (Bit& x : a) x = rng.next_bit();
        for (Bit& x : b) x = rng.next_bit();
        CorrelationMatrix m(rows, cols);
        m.train(a, b);
        int ones = 0;
        for (Bit x : a) ones += x;
        const ClassVector cv = recall(m, a);
        for (int c = 0; c < cols; ++c)
            CHECK(cv.summed[static_cast<std::size_t>(c)] ==
                  ones * b[static_cast<std::size_t>(c)]);
    }
}

TEST_CASE("more training never lowers a summed recall value") {
    SplitMix64 rng(77);
    CorrelationMatrix m(6, 6);
    BitVec probe(6);
    for (Bit& x : probe) x = rng.next_bit();
    std::vector<int> last(6, 0);
    for (int round = 0; round < 10; ++round) {
        BitVec a(6), b(6);
        for (Bit& x : a) x = rng.next_bit();
        for (Bit& x : b) x = rng.next_bit();
        m.train(a, b);
        const ClassVector cv = recall(m, probe);
        for (int c = 0; c < 6; ++c) {
            CHECK(cv.summed[static_cast<std::size_t>(c)] >= last[static_cast<std::size_t>(c)]);
            last[static_cast<std::size_t>(c)] = cv.summed[static_cast<std::size_t>(c)];
        }
    }
}

TEST_CASE("L-Max is invariant under positive scaling") {
    const std::vector<int> summed = {3, 1, 3, 0, 2};
    std::vector<int> scaled;
    for (int v : summed) scaled.push_back(5 * v);
    CHECK(lmax_threshold(summed) == lmax_threshold(scaled));
    CHECK(lmax_threshold(summed) == parse_bits("10100"));
}

TEST_CASE("two-stage recall with an identity-pattern second stage") {
    CorrelationMatrix m1(4, 5);
    m1.train(parse_bits("1110"), parse_bits("11101"));
    CorrelationMatrix m2(5, 5);
    for (int i = 0; i < 5; ++i) {
        BitVec e(5, 0);
        e[static_cast<std::size_t>(i)] = 1;
        m2.train(e, e);
    }
    CHECK(two_stage_recall(m1, m2, parse_bits("1110")) == parse_bits("11101"));
    CHECK(two_stage_recall(m1, m2, parse_bits("0000")) == parse_bits("00000"));
}

TEST_CASE("two-stage round trip recovers the trained output pattern") {
    // (input, class) in the first stage, (class, output) in the second.
    const BitVec input = parse_bits("101100");
    const BitVec cls = parse_bits("0100");
    const BitVec output = parse_bits("11010");
    CorrelationMatrix m1(6, 4), m2(4, 5);
    m1.train(input, cls);
    m2.train(cls, output);
    CHECK(two_stage_recall(m1, m2, input) == output);
}

TEST_CASE("matrix text round-trips") {
    CorrelationMatrix m(3, 4);
    m.train(parse_bits("110"), parse_bits("1001"));
    const std::string text = m.to_text();
    const CorrelationMatrix back = CorrelationMatrix::from_text(text);
    CHECK(back.rows() == 3);
    CHECK(back.cols() == 4);
    CHECK(back.to_text() == text);
    CHECK_THROWS_AS(CorrelationMatrix::from_text("10\n1\n"), std::invalid_argument);
}

TEST_CASE("tuple one-hot expansion") {
    // 4-bit input, 2-bit tuples: 01 -> slot 1, 10 -> slot 2 (MSB-first).
    CHECK(expand_tuples(parse_bits("0110"), 2) == parse_bits("01000010"));
    CHECK(expand_tuples(parse_bits("0000"), 2) == parse_bits("10001000"));
    const BitVec expanded = expand_tuples(parse_bits("111011"), 3);
    CHECK(expanded.size() == 16);
    // 111 -> slot 7 of the first block, 011 -> slot 3 of the second.
    CHECK(expanded[7] == 1);
    CHECK(expanded[8 + 3] == 1);
    int ones = 0;
    for (Bit b : expanded) ones += b;
    CHECK(ones == 2);
    CHECK_THROWS_AS(expand_tuples(parse_bits("101"), 2), std::invalid_argument);
}

TEST_CASE("training rejects mismatched dimensions") {
    CorrelationMatrix m(3, 4);
    CHECK_THROWS_AS(m.train(parse_bits("11"), parse_bits("1001")), std::invalid_argument);
    CHECK_THROWS_AS(recall(m, parse_bits("1111")), std::invalid_argument);
}
