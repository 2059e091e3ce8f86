#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tuplecode/bits.hpp"

namespace tuplecode {

using Codeword = BitVec;

/// The set of valid codewords shared by encoder and decoder. Deliberately a
/// dumb aggregate: invalid content stays representable so validate_codebook
/// can report on it.
struct Codebook {
    std::vector<Codeword> words;
    int n = 0; // codeword length in bits

    int size() const { return static_cast<int>(words.size()); } // C
    const Codeword& word(int j) const { return words.at(static_cast<std::size_t>(j)); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every codebook invariant: uniform length n, n > 2 (a 2-bit codebook
/// with four words is the full space and can never correct anything), binary
/// symbols, distinct codewords, C consistent.
ValidationReport validate_codebook(const Codebook& cb);

/// Deterministically builds a codebook of C distinct n-bit words that greedily
/// maximizes the minimum pairwise Hamming distance. The first word is drawn
/// from the seed; later picks break distance ties by the codeword's value as
/// an MSB-first integer, ascending. Throws on n <= 2 or C > 2^n.
Codebook generate_codebook(int n, int C, std::uint64_t seed);

/// Concatenates total_bits/n codewords drawn uniformly (seeded) from the
/// codebook. Throws unless total_bits is divisible by n.
BitStream encode_message(const Codebook& cb, std::size_t total_bits, std::uint64_t seed);

/// Fixed-arrangement encoding: concatenates the given 0-based codeword
/// indices in order.
BitStream encode_sequence(const Codebook& cb, std::span<const int> word_indices);

/// Splits a stream into length-n groups; throws unless divisible.
std::vector<BitVec> split_groups(std::span<const Bit> stream, int n);

// Text format: optional first line "# n=<n> C=<C>", then one codeword per
// line as contiguous 0/1 characters.
std::string codebook_to_text(const Codebook& cb);
Codebook codebook_from_text(std::string_view text);
Codebook load_codebook(const std::string& path);
void save_codebook(const Codebook& cb, const std::string& path);

} // namespace tuplecode
