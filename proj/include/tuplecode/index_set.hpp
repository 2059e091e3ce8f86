#pragma once

#include <span>
#include <vector>

namespace tuplecode {

/// One tuple arrangement: N distinct 1-based bit positions in ascending
/// order, plus its 1-based rank in the lexicographic enumeration of all
/// C(n,N) arrangements. I_1 = {1,2,3}, I_2 = {1,2,4}, ...
struct IndexSet {
    std::vector<int> positions;
    int ordinal = 0;
};

/// The ordered collection of index sets one decoder uses. m() classifiers,
/// at most C(n,N); ordinals always refer to the full lexicographic
/// enumeration, so a pruned set keeps its original labels.
struct ClassifierSet {
    int n = 0;
    int N = 0;
    std::vector<IndexSet> index_sets;

    int size() const { return static_cast<int>(index_sets.size()); } // m

    /// Positions in 1..n that no retained index set covers; empty means the
    /// coverage invariant holds.
    std::vector<int> uncovered_positions() const;
    bool covers_all_positions() const { return uncovered_positions().empty(); }
};

long long binomial(int n, int k);

/// All C(n,N) index sets in lexicographic order. Throws on N <= 1, N > n or
/// n <= 2.
ClassifierSet enumerate_index_sets(int n, int N);

/// Removes the given ordinals from the full set. Requires `full` to actually
/// be the maximum enumeration; throws on unknown or duplicate ordinals.
/// Coverage is NOT enforced here — callers check uncovered_positions() and
/// report.
ClassifierSet prune_classifiers(const ClassifierSet& full, std::span<const int> removed_ordinals);

} // namespace tuplecode
