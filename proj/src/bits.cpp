#include "tuplecode/bits.hpp"

#include <stdexcept>

namespace tuplecode {

std::string format_bits(std::span<const Bit> bits) {
    std::string out;
    out.reserve(bits.size());
    for (Bit b : bits) out.push_back(b ? '1' : '0');
    return out;
}

BitVec parse_bits(std::string_view text) {
    BitVec out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '0')
            out.push_back(0);
        else if (c == '1')
            out.push_back(1);
        else
            throw std::invalid_argument("bit string may contain only '0' and '1', got '" +
                                        std::string(1, c) + "'");
    }
    return out;
}

std::uint32_t pack_word(std::span<const Bit> word) {
    if (word.size() > 32)
        throw std::invalid_argument("packed words are limited to 32 bits");
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i]) mask |= (1u << i);
    return mask;
}

BitVec unpack_word(std::uint32_t mask, int n) {
    if (n < 0 || n > 32) throw std::invalid_argument("word length out of range");
    BitVec out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    return out;
}

} // namespace tuplecode
