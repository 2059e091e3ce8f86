#include "tuplecode/index_set.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace tuplecode {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::vector<int> ClassifierSet::uncovered_positions() const {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const IndexSet& is : index_sets)
        for (int p : is.positions) seen[static_cast<std::size_t>(p)] = 1;
    std::vector<int> missing;
    for (int p = 1; p <= n; ++p)
        if (!seen[static_cast<std::size_t>(p)]) missing.push_back(p);
    return missing;
}

ClassifierSet enumerate_index_sets(int n, int N) {
    if (n <= 2) throw std::invalid_argument("index sets require n > 2");
    if (N <= 1) throw std::invalid_argument("tuple length must satisfy N > 1");
    if (N > n) throw std::invalid_argument("tuple length must satisfy N <= n");

    ClassifierSet cls;
    cls.n = n;
    cls.N = N;
    cls.index_sets.reserve(static_cast<std::size_t>(binomial(n, N)));

    // Lexicographic successor walk over position lists.
    std::vector<int> cur(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    int ordinal = 1;
    while (true) {
        cls.index_sets.push_back(IndexSet{cur, ordinal++});
        int i = N - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (N - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < N; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return cls;
}

ClassifierSet prune_classifiers(const ClassifierSet& full, std::span<const int> removed_ordinals) {
    const long long max_m = binomial(full.n, full.N);
    if (full.size() != max_m)
        throw std::invalid_argument("prune_classifiers requires the maximum classifier set (" +
                                    std::to_string(max_m) + " for n=" + std::to_string(full.n) +
                                    ", N=" + std::to_string(full.N) + ")");

    std::set<int> removed;
    for (int ord : removed_ordinals) {
        if (ord < 1 || ord > full.size())
            throw std::invalid_argument("unknown classifier ordinal: " + std::to_string(ord));
        if (!removed.insert(ord).second)
            throw std::invalid_argument("duplicate classifier ordinal: " + std::to_string(ord));
    }

    ClassifierSet out;
    out.n = full.n;
    out.N = full.N;
    out.index_sets.reserve(full.index_sets.size() - removed.size());
    for (const IndexSet& is : full.index_sets)
        if (!removed.contains(is.ordinal)) out.index_sets.push_back(is);
    return out;
}

} // namespace tuplecode
