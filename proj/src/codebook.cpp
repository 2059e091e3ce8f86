#include "tuplecode/codebook.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tuplecode/rng.hpp"

namespace tuplecode {

ValidationReport validate_codebook(const Codebook& cb) {
    ValidationReport report;
    auto flag = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    if (cb.n <= 2) {
        // With C = 4 and n = 2 the codebook would already be all four
        // possible 2-bit words, so every corrupted group still decodes to
        // *some* codeword and errors can never be detected (Condition 1).
        flag("codeword length must satisfy n > 2 (a length-2 codebook exhausts all 2^2 "
             "codewords, so any received group is always a valid codeword)");
    }
    if (cb.words.empty()) flag("codebook has no codewords");

    for (std::size_t j = 0; j < cb.words.size(); ++j) {
        const Codeword& w = cb.words[j];
        if (static_cast<int>(w.size()) != cb.n)
            flag("codeword " + std::to_string(j + 1) + " has length " +
                 std::to_string(w.size()) + ", expected n=" + std::to_string(cb.n));
        for (Bit b : w)
            if (b != 0 && b != 1) {
                flag("codeword " + std::to_string(j + 1) + " contains a non-binary symbol");
                break;
            }
    }

    std::set<Codeword> seen;
    for (std::size_t j = 0; j < cb.words.size(); ++j)
        if (!seen.insert(cb.words[j]).second)
            flag("duplicate codeword at index " + std::to_string(j + 1) + ": " +
                 format_bits(cb.words[j]));

    return report;
}

namespace {

// MSB-first integer reading of a codeword, used for deterministic tie-breaks.
BitVec word_from_value(std::uint64_t value, int n) {
    BitVec out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = static_cast<Bit>((value >> (n - 1 - i)) & 1u);
    return out;
}

int hamming(std::uint64_t a, std::uint64_t b) { return std::popcount(a ^ b); }

} // namespace

Codebook generate_codebook(int n, int C, std::uint64_t seed) {
    if (n <= 2) throw std::invalid_argument("generate_codebook requires n > 2");
    if (n > 24) throw std::invalid_argument("generate_codebook supports n <= 24");
    if (C < 1) throw std::invalid_argument("generate_codebook requires C >= 1");
    const std::uint64_t space = 1ull << n;
    if (static_cast<std::uint64_t>(C) > space)
        throw std::invalid_argument("impossible parameters: C > 2^n");

    SplitMix64 rng(seed);
    std::vector<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(C));
    chosen.push_back(rng.next_below(space));

    std::vector<char> taken(space, 0);
    taken[chosen[0]] = 1;

    while (chosen.size() < static_cast<std::size_t>(C)) {
        // Greedy: maximize the minimum distance to everything chosen so far;
        // ties go to the smallest candidate value.
        int best_min = -1;
        std::uint64_t best = 0;
        for (std::uint64_t cand = 0; cand < space; ++cand) {
            if (taken[cand]) continue;
            int dmin = n + 1;
            for (std::uint64_t w : chosen) dmin = std::min(dmin, hamming(cand, w));
            if (dmin > best_min) {
                best_min = dmin;
                best = cand;
            }
        }
        chosen.push_back(best);
        taken[best] = 1;
    }

    Codebook cb;
    cb.n = n;
    for (std::uint64_t w : chosen) cb.words.push_back(word_from_value(w, n));
    return cb;
}

BitStream encode_message(const Codebook& cb, std::size_t total_bits, std::uint64_t seed) {
    if (cb.n <= 0 || cb.words.empty())
        throw std::invalid_argument("encode_message needs a non-empty codebook");
    if (total_bits % static_cast<std::size_t>(cb.n) != 0)
        throw std::invalid_argument("total_bits must be divisible by the codeword length");

    SplitMix64 rng(seed);
    BitStream out;
    out.origin = StreamOrigin::encoded;
    out.bits.reserve(total_bits);
    const std::size_t groups = total_bits / static_cast<std::size_t>(cb.n);
    for (std::size_t g = 0; g < groups; ++g) {
        const Codeword& w = cb.words[rng.next_below(cb.words.size())];
        out.bits.insert(out.bits.end(), w.begin(), w.end());
    }
    return out;
}

BitStream encode_sequence(const Codebook& cb, std::span<const int> word_indices) {
    BitStream out;
    out.origin = StreamOrigin::encoded;
    out.bits.reserve(word_indices.size() * static_cast<std::size_t>(cb.n));
    for (int j : word_indices) {
        if (j < 0 || j >= cb.size())
            throw std::invalid_argument("codeword index out of range: " + std::to_string(j));
        const Codeword& w = cb.words[static_cast<std::size_t>(j)];
        out.bits.insert(out.bits.end(), w.begin(), w.end());
    }
    return out;
}

std::vector<BitVec> split_groups(std::span<const Bit> stream, int n) {
    if (n <= 0) throw std::invalid_argument("group length must be positive");
    if (stream.size() % static_cast<std::size_t>(n) != 0)
        throw std::invalid_argument("stream length " + std::to_string(stream.size()) +
                                    " is not divisible by n=" + std::to_string(n));
    std::vector<BitVec> groups;
    groups.reserve(stream.size() / static_cast<std::size_t>(n));
    for (std::size_t off = 0; off < stream.size(); off += static_cast<std::size_t>(n))
        groups.emplace_back(stream.begin() + static_cast<std::ptrdiff_t>(off),
                            stream.begin() + static_cast<std::ptrdiff_t>(off) + n);
    return groups;
}

std::string codebook_to_text(const Codebook& cb) {
    std::ostringstream out;
    out << "# n=" << cb.n << " C=" << cb.size() << "\n";
    for (const Codeword& w : cb.words) out << format_bits(w) << "\n";
    return out.str();
}

Codebook codebook_from_text(std::string_view text) {
    Codebook cb;
    bool have_header = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            int n = 0, c = 0;
            if (std::sscanf(line.c_str(), "# n=%d C=%d", &n, &c) == 2) {
                cb.n = n;
                have_header = true;
            }
            continue;
        }
        cb.words.push_back(parse_bits(line));
    }
    if (!have_header && !cb.words.empty()) cb.n = static_cast<int>(cb.words.front().size());
    return cb;
}

Codebook load_codebook(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open codebook file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return codebook_from_text(buf.str());
}

void save_codebook(const Codebook& cb, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write codebook file: " + path);
    out << codebook_to_text(cb);
    if (!out) throw std::runtime_error("failed writing codebook file: " + path);
}

} // namespace tuplecode
