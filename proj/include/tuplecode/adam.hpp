#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tuplecode/bits.hpp"

namespace tuplecode {

/// Binary correlation-matrix memory. Weight (r,c) is set to 1 once any
/// trained pair had input bit r and output bit c both 1; training
/// OR-accumulates, so storing a pair twice is the same as storing it once.
class CorrelationMatrix {
public:
    CorrelationMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Bit at(int r, int c) const { return weights_[static_cast<std::size_t>(r) * cols_ + c]; }

    /// Stores one (input, output) association. Throws on dimension mismatch.
    void train(std::span<const Bit> input, std::span<const Bit> output);

    // Fixture format: one row of contiguous 0/1 characters per line.
    std::string to_text() const;
    static CorrelationMatrix from_text(std::string_view text);

private:
    int rows_;
    int cols_;
    BitVec weights_;
};

/// Summed recall values C = AᵀM and their L-Max thresholding.
struct ClassVector {
    std::vector<int> summed;
    BitVec thresholded;
};

/// 1 exactly where summed attains its maximum; an all-zero input thresholds
/// to all-zero (an empty memory recalls nothing).
BitVec lmax_threshold(std::span<const int> summed);

ClassVector recall(const CorrelationMatrix& m, std::span<const Bit> probe);

/// Recall through the first matrix, threshold, feed the class through the
/// second matrix, threshold again.
BitVec two_stage_recall(const CorrelationMatrix& m1, const CorrelationMatrix& m2,
                        std::span<const Bit> probe);

/// Orthogonalising N-tuple pre-processor: splits the input into consecutive
/// N-bit tuples and one-hot-expands each to 2^N bits (tuple read MSB-first).
/// Input length must be divisible by N.
BitVec expand_tuples(std::span<const Bit> input, int tuple_bits);

} // namespace tuplecode
