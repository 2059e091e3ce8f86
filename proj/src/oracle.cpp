#include "tuplecode/oracle.hpp"

#include <stdexcept>

namespace tuplecode::oracle {

HammingDecision min_hamming_decode(std::span<const Bit> group, const Codebook& cb) {
    HammingDecision out;
    out.distances.reserve(cb.words.size());
    for (const Codeword& w : cb.words) {
        if (w.size() != group.size())
            throw std::invalid_argument("min_hamming_decode: group/codeword length mismatch");
        int d = 0;
        for (std::size_t i = 0; i < group.size(); ++i)
            if (group[i] != w[i]) ++d;
        out.distances.push_back(d);
    }
    int best = out.distances.empty() ? 0 : out.distances.front();
    for (int d : out.distances)
        if (d < best) best = d;
    for (std::size_t j = 0; j < out.distances.size(); ++j)
        if (out.distances[j] == best) out.minimizers.push_back(static_cast<int>(j));
    return out;
}

long long closed_form_votes(int agreement_k, int N) {
    if (agreement_k < N) return 0;
    // Pascal's rule by plain addition, kept separate from the library's
    // multiplicative binomial on purpose.
    std::vector<long long> row(static_cast<std::size_t>(N) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= agreement_k; ++i)
        for (int j = N < i ? N : i; j >= 1; --j)
            row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(N)];
}

} // namespace tuplecode::oracle
