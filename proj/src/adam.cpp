#include "tuplecode/adam.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tuplecode {

CorrelationMatrix::CorrelationMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("correlation matrix dimensions must be positive");
    weights_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

void CorrelationMatrix::train(std::span<const Bit> input, std::span<const Bit> output) {
    if (input.size() != static_cast<std::size_t>(rows_) ||
        output.size() != static_cast<std::size_t>(cols_))
        throw std::invalid_argument("train: pattern dimensions do not match the matrix");
    for (int r = 0; r < rows_; ++r) {
        if (!input[static_cast<std::size_t>(r)]) continue;
        Bit* row = weights_.data() + static_cast<std::size_t>(r) * cols_;
        for (int c = 0; c < cols_; ++c) row[c] |= output[static_cast<std::size_t>(c)];
    }
}

std::string CorrelationMatrix::to_text() const {
    std::ostringstream out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out << (at(r, c) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

CorrelationMatrix CorrelationMatrix::from_text(std::string_view text) {
    std::vector<BitVec> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        rows.push_back(parse_bits(line));
    }
    if (rows.empty()) throw std::invalid_argument("correlation matrix text has no rows");
    const std::size_t cols = rows.front().size();
    for (const BitVec& r : rows)
        if (r.size() != cols)
            throw std::invalid_argument("correlation matrix rows have uneven lengths");

    CorrelationMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.weights_[r * cols + c] = rows[r][c];
    return m;
}

BitVec lmax_threshold(std::span<const int> summed) {
    BitVec out(summed.size(), 0);
    if (summed.empty()) return out;
    const int peak = *std::max_element(summed.begin(), summed.end());
    if (peak == 0) return out; // empty memory recalls nothing
    for (std::size_t i = 0; i < summed.size(); ++i)
        if (summed[i] == peak) out[i] = 1;
    return out;
}

ClassVector recall(const CorrelationMatrix& m, std::span<const Bit> probe) {
    if (probe.size() != static_cast<std::size_t>(m.rows()))
        throw std::invalid_argument("recall: probe length does not match matrix rows");

    ClassVector cv;
    cv.summed.assign(static_cast<std::size_t>(m.cols()), 0);
    for (int r = 0; r < m.rows(); ++r) {
        if (!probe[static_cast<std::size_t>(r)]) continue;
        for (int c = 0; c < m.cols(); ++c) cv.summed[static_cast<std::size_t>(c)] += m.at(r, c);
    }
    cv.thresholded = lmax_threshold(cv.summed);
    return cv;
}

BitVec two_stage_recall(const CorrelationMatrix& m1, const CorrelationMatrix& m2,
                        std::span<const Bit> probe) {
    const ClassVector stage1 = recall(m1, probe);
    if (stage1.thresholded.size() != static_cast<std::size_t>(m2.rows()))
        throw std::invalid_argument("two_stage_recall: class width does not match second matrix");
    return recall(m2, stage1.thresholded).thresholded;
}

BitVec expand_tuples(std::span<const Bit> input, int tuple_bits) {
    if (tuple_bits <= 0 || tuple_bits > 16)
        throw std::invalid_argument("expand_tuples needs a tuple length in 1..16");
    if (input.size() % static_cast<std::size_t>(tuple_bits) != 0)
        throw std::invalid_argument("expand_tuples: input length not divisible by tuple length");

    const std::size_t slots = 1u << tuple_bits;
    BitVec out;
    out.assign((input.size() / static_cast<std::size_t>(tuple_bits)) * slots, 0);
    std::size_t base = 0;
    for (std::size_t off = 0; off < input.size(); off += static_cast<std::size_t>(tuple_bits)) {
        std::size_t value = 0;
        for (int i = 0; i < tuple_bits; ++i)
            value = (value << 1) | input[off + static_cast<std::size_t>(i)];
        out[base + value] = 1;
        base += slots;
    }
    return out;
}

} // namespace tuplecode
