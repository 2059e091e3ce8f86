#pragma once

#include <span>
#include <vector>

#include "tuplecode/bits.hpp"
#include "tuplecode/codebook.hpp"

// Brute-force references for the property suites. Deliberately naive loops
// with no code shared with the decoder path, so they stay independent of what
// they check.

namespace tuplecode::oracle {

struct HammingDecision {
    std::vector<int> minimizers; // all 0-based indices attaining the minimum
    std::vector<int> distances;  // per codeword
};

HammingDecision min_hamming_decode(std::span<const Bit> group, const Codebook& cb);

/// Votes a codeword receives from the FULL classifier set when it agrees with
/// the group on k positions: C(k, N), 0 when k < N.
long long closed_form_votes(int agreement_k, int N);

} // namespace tuplecode::oracle
