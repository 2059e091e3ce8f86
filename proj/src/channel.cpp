#include "tuplecode/channel.hpp"

#include <stdexcept>
#include <string>

#include "tuplecode/kernels.hpp"
#include "tuplecode/rng.hpp"

namespace tuplecode {

bool ChannelParams::valid() const {
    auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(p_inv) || !in_unit(p_ins) || !in_unit(p_del)) return false;
    // Small slack for sums like 0.3+0.3+0.4 that land just above 1 in floating point.
    return p_inv + p_ins + p_del <= 1.0 + 1e-9;
}

std::pair<BitStream, ErrorLog> transmit(const BitStream& stream, const ChannelParams& params,
                                        std::uint64_t seed) {
    if (!params.valid())
        throw std::invalid_argument("invalid channel params: probabilities must lie in [0,1] "
                                    "and sum to at most 1");

    SplitMix64 rng(seed);
    BitStream out;
    out.origin = StreamOrigin::received;
    out.bits.reserve(stream.size());
    ErrorLog log;

    const double t_del = params.p_del;
    const double t_ins = params.p_del + params.p_ins;
    const double t_inv = params.p_del + params.p_ins + params.p_inv;

    for (std::size_t i = 0; i < stream.size(); ++i) {
        const Bit b = stream.bits[i];
        const double u = rng.next_double();
        if (u < t_del) {
            log.deletion_positions.push_back(i);
        } else if (u < t_ins) {
            out.bits.push_back(rng.next_bit());
            out.bits.push_back(b);
            log.insertion_positions.push_back(i);
        } else if (u < t_inv) {
            out.bits.push_back(static_cast<Bit>(b ^ 1u));
            log.inversion_positions.push_back(i);
        } else {
            out.bits.push_back(b);
        }
    }
    return {std::move(out), std::move(log)};
}

std::size_t count_channel_inversions(const BitStream& sent, const BitStream& received) {
    if (sent.size() != received.size())
        throw std::invalid_argument("count_channel_inversions requires equal lengths (got " +
                                    std::to_string(sent.size()) + " vs " +
                                    std::to_string(received.size()) + ")");
    if (sent.empty()) return 0;
    return kernels::mismatch_count(sent.bits.data(), received.bits.data(), sent.size());
}

} // namespace tuplecode
