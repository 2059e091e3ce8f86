#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tuplecode/bits.hpp"

namespace tuplecode {

/// RID channel probabilities. Per transmitted bit exactly one of four
/// outcomes happens: deletion, insertion, inversion, or clean pass-through
/// with probability p_ok() = 1 - p_inv - p_ins - p_del.
struct ChannelParams {
    double p_inv = 0.0;
    double p_ins = 0.0;
    double p_del = 0.0;

    double p_ok() const { return 1.0 - p_inv - p_ins - p_del; }
    bool valid() const;

    static ChannelParams inversion_only(double p) { return ChannelParams{p, 0.0, 0.0}; }
};

/// Positions are indices into the *input* stream: for an insertion, the index
/// of the bit the random bit was emitted in front of.
struct ErrorLog {
    std::vector<std::size_t> inversion_positions;
    std::vector<std::size_t> insertion_positions;
    std::vector<std::size_t> deletion_positions;

    std::size_t inversions() const { return inversion_positions.size(); }
    std::size_t insertions() const { return insertion_positions.size(); }
    std::size_t deletions() const { return deletion_positions.size(); }
};

/// Corrupts a stream bit by bit, in input order. Each bit independently draws
/// one outcome from the four-way categorical distribution (delete, insert,
/// invert, ok — checked in that order against a single uniform draw); an
/// inserted bit is uniform 0/1 from the same generator and cannot itself
/// trigger further events. Deterministic for fixed (stream, params, seed).
std::pair<BitStream, ErrorLog> transmit(const BitStream& stream,
                                        const ChannelParams& params,
                                        std::uint64_t seed);

/// Number of positions where sent and received differ. Only meaningful in the
/// inversion-only regime; throws on length mismatch.
std::size_t count_channel_inversions(const BitStream& sent, const BitStream& received);

} // namespace tuplecode
