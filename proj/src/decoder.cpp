#include "tuplecode/decoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tuplecode/kernels.hpp"

namespace tuplecode {

Mapper extract_mapper(std::span<const Bit> word, const IndexSet& idx) {
    Mapper m;
    m.values.reserve(idx.positions.size());
    for (int p : idx.positions) {
        if (p < 1 || static_cast<std::size_t>(p) > word.size())
            throw std::invalid_argument("index set position " + std::to_string(p) +
                                        " outside word of length " + std::to_string(word.size()));
        m.values.push_back(word[static_cast<std::size_t>(p - 1)]);
    }
    return m;
}

int voter_confidence(const VoteTally& tally) {
    if (tally.size() < 2)
        throw std::invalid_argument("voter confidence needs at least two codewords");
    const auto max_it = std::max_element(tally.votes.begin(), tally.votes.end());
    int second = -1;
    for (auto it = tally.votes.begin(); it != tally.votes.end(); ++it)
        if (it != max_it) second = std::max(second, *it);
    return *max_it - second;
}

GroupDecision decode_group(const VoteTally& tally) {
    if (tally.votes.empty()) throw std::invalid_argument("decode_group on an empty tally");

    GroupDecision d;
    const auto max_it = std::max_element(tally.votes.begin(), tally.votes.end());
    d.winner = static_cast<int>(max_it - tally.votes.begin());
    d.tie = std::count(tally.votes.begin(), tally.votes.end(), *max_it) > 1;
    d.undecided = (*max_it == 0);
    if (d.undecided) d.winner = 0;
    d.confidence = tally.size() >= 2 ? voter_confidence(tally) : *max_it;
    return d;
}

NeuralDecoder::NeuralDecoder(Codebook cb, ClassifierSet cls)
    : cb_(std::move(cb)), cls_(std::move(cls)) {
    const ValidationReport report = validate_codebook(cb_);
    if (!report.ok())
        throw std::invalid_argument("invalid codebook: " + report.violations.front());
    if (cls_.n != cb_.n)
        throw std::invalid_argument("classifier set is for n=" + std::to_string(cls_.n) +
                                    " but codebook has n=" + std::to_string(cb_.n));
    if (cb_.n > 32) throw std::invalid_argument("decoder supports n <= 32");

    length_mask_ = cb_.n == 32 ? ~0u : ((1u << cb_.n) - 1u);
    word_masks_.reserve(cb_.words.size());
    for (const Codeword& w : cb_.words) word_masks_.push_back(pack_word(w));
    classifier_masks_.reserve(cls_.index_sets.size());
    for (const IndexSet& is : cls_.index_sets) {
        std::uint32_t mask = 0;
        for (int p : is.positions) mask |= (1u << (p - 1));
        classifier_masks_.push_back(mask);
    }
}

VoteTally NeuralDecoder::vote(std::span<const Bit> group) const {
    if (group.size() != static_cast<std::size_t>(cb_.n))
        throw std::invalid_argument("group length " + std::to_string(group.size()) +
                                    " does not match codeword length n=" + std::to_string(cb_.n));

    const std::uint32_t g = pack_word(group);
    VoteTally tally;
    tally.classifiers = cls_.size();
    tally.votes.reserve(word_masks_.size());
    for (std::uint32_t w : word_masks_) {
        const std::uint32_t agree = ~(g ^ w) & length_mask_;
        tally.votes.push_back(static_cast<int>(kernels::subset_count(
            agree, classifier_masks_.data(), classifier_masks_.size())));
    }
    return tally;
}

std::pair<BitStream, std::vector<GroupDecision>> NeuralDecoder::decode_message(
    const BitStream& received) const {
    if (received.size() % static_cast<std::size_t>(cb_.n) != 0)
        throw std::invalid_argument("received length " + std::to_string(received.size()) +
                                    " is not divisible by n=" + std::to_string(cb_.n));

    BitStream decoded;
    decoded.origin = StreamOrigin::decoded;
    decoded.bits.reserve(received.size());
    std::vector<GroupDecision> decisions;
    decisions.reserve(received.size() / static_cast<std::size_t>(cb_.n));

    for (std::size_t off = 0; off < received.size(); off += static_cast<std::size_t>(cb_.n)) {
        const std::span<const Bit> group(received.bits.data() + off,
                                         static_cast<std::size_t>(cb_.n));
        const GroupDecision d = decode_group(vote(group));
        const Codeword& w = cb_.words[static_cast<std::size_t>(d.winner)];
        decoded.bits.insert(decoded.bits.end(), w.begin(), w.end());
        decisions.push_back(d);
    }
    return {std::move(decoded), std::move(decisions)};
}

VoteTally vote(std::span<const Bit> group, const Codebook& cb, const ClassifierSet& cls) {
    return NeuralDecoder(cb, cls).vote(group);
}

std::pair<BitStream, std::vector<GroupDecision>> decode_message(const BitStream& received,
                                                                const Codebook& cb,
                                                                const ClassifierSet& cls) {
    return NeuralDecoder(cb, cls).decode_message(received);
}

} // namespace tuplecode
