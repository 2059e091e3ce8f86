#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tuplecode {

/// A single binary symbol, always 0 or 1.
using Bit = std::uint8_t;
using BitVec = std::vector<Bit>;

enum class StreamOrigin { encoded, received, decoded };

/// An ordered bit sequence tagged with where in the pipeline it was produced.
struct BitStream {
    BitVec bits;
    StreamOrigin origin = StreamOrigin::encoded;

    std::size_t size() const { return bits.size(); }
    bool empty() const { return bits.empty(); }
};

/// Renders bits as a contiguous 0/1 string, e.g. "0101".
std::string format_bits(std::span<const Bit> bits);

/// Parses a contiguous 0/1 string; throws std::invalid_argument on any other
/// character.
BitVec parse_bits(std::string_view text);

/// Packs a word of up to 32 bits into a mask. Bit i of the mask holds the
/// word's 1-based position i+1, so position masks and word masks compose with
/// plain bitwise ops.
std::uint32_t pack_word(std::span<const Bit> word);

BitVec unpack_word(std::uint32_t mask, int n);

} // namespace tuplecode
