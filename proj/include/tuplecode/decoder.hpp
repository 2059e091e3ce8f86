#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tuplecode/bits.hpp"
#include "tuplecode/codebook.hpp"
#include "tuplecode/index_set.hpp"

namespace tuplecode {

/// The N bit values a word exposes at one index set's positions.
struct Mapper {
    BitVec values;
};

/// Per-codeword vote counts o_1..o_C for one received group.
struct VoteTally {
    std::vector<int> votes;
    int classifiers = 0; // m used

    int size() const { return static_cast<int>(votes.size()); } // C
};

/// Outcome of decoding one group. winner is a 0-based codebook index; on a
/// shared maximum the lowest index wins and tie is set; a zero-vote group is
/// flagged undecided and still reports winner 0 so the pipeline can emit a
/// codeword.
struct GroupDecision {
    int winner = 0;
    int confidence = 0; // δ
    bool tie = false;
    bool undecided = false;
};

/// values[j] = word[positions[j]] (1-based positions). Throws if the word is
/// too short for the index set.
Mapper extract_mapper(std::span<const Bit> word, const IndexSet& idx);

/// δ = max vote minus the highest vote with one maximal element removed;
/// exactly 0 when the maximum is shared. Throws when fewer than two
/// codewords.
int voter_confidence(const VoteTally& tally);

GroupDecision decode_group(const VoteTally& tally);

/// The N-tuple binary neural network decoder: a codebook plus a classifier
/// set, with codewords and index sets packed to bit masks once so voting is
/// a subset-containment count per codeword.
class NeuralDecoder {
public:
    NeuralDecoder(Codebook cb, ClassifierSet cls);

    /// One vote per classifier whose positions all agree between group and
    /// codeword, tallied per codeword.
    VoteTally vote(std::span<const Bit> group) const;

    /// Decodes a received stream group by group; the decoded stream is the
    /// concatenation of winning codewords. Inversion-only regime: length
    /// must be divisible by n.
    std::pair<BitStream, std::vector<GroupDecision>> decode_message(const BitStream& received) const;

    const Codebook& codebook() const { return cb_; }
    const ClassifierSet& classifiers() const { return cls_; }

private:
    Codebook cb_;
    ClassifierSet cls_;
    std::vector<std::uint32_t> word_masks_;
    std::vector<std::uint32_t> classifier_masks_;
    std::uint32_t length_mask_ = 0;
};

// One-shot conveniences matching the operation signatures.
VoteTally vote(std::span<const Bit> group, const Codebook& cb, const ClassifierSet& cls);
std::pair<BitStream, std::vector<GroupDecision>> decode_message(const BitStream& received,
                                                                const Codebook& cb,
                                                                const ClassifierSet& cls);

} // namespace tuplecode
