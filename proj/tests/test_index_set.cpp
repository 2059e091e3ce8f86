#include "doctest.h"

#include <stdexcept>

#include <set>

#include "tuplecode/index_set.hpp"
#include "tuplecode/sweep.hpp"

using namespace tuplecode;

TEST_CASE("enumeration of (7,3) matches the published arrangement table") {
    const ClassifierSet cls = enumerate_index_sets(7, 3);
    REQUIRE(cls.size() == 35);
    CHECK(cls.index_sets[0].positions == std::vector<int>{1, 2, 3});   // I_1
    CHECK(cls.index_sets[1].positions == std::vector<int>{1, 2, 4});   // I_2
    CHECK(cls.index_sets[11].positions == std::vector<int>{1, 4, 7});  // I_12
    CHECK(cls.index_sets[15].positions == std::vector<int>{2, 3, 4});  // I_16
    CHECK(cls.index_sets[25].positions == std::vector<int>{3, 4, 5});  // I_26
    CHECK(cls.index_sets[31].positions == std::vector<int>{4, 5, 6});  // I_32
    CHECK(cls.index_sets[34].positions == std::vector<int>{5, 6, 7});  // I_35
    for (int i = 0; i < 35; ++i) CHECK(cls.index_sets[static_cast<std::size_t>(i)].ordinal == i + 1);
}

TEST_CASE("enumeration edge shapes") {
    const ClassifierSet whole = enumerate_index_sets(5, 5);
    REQUIRE(whole.size() == 1);
    CHECK(whole.index_sets[0].positions == std::vector<int>{1, 2, 3, 4, 5});

    CHECK(enumerate_index_sets(8, 2).size() == 28);
    CHECK(enumerate_index_sets(8, 3).size() == 56);
    CHECK(enumerate_index_sets(12, 3).size() == 220);

    CHECK_THROWS_AS(enumerate_index_sets(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_index_sets(7, 8), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_index_sets(2, 2), std::invalid_argument);
}

TEST_CASE("enumeration count always equals the binomial coefficient") {
    for (int n = 3; n <= 10; ++n)
        for (int N = 2; N <= n; ++N)
            CHECK(enumerate_index_sets(n, N).size() == binomial(n, N));
}

TEST_CASE("pruning the 28 two-bit arrangements by the Group-A list keeps 22") {
    const ClassifierSet full = enumerate_index_sets(8, 2);
    const std::vector<int> removed = {2, 9, 15, 20, 24, 27};
    const ClassifierSet pruned = prune_classifiers(full, removed);
    CHECK(pruned.size() == 22);
    CHECK(pruned.covers_all_positions());
    // Ordinal labels survive pruning.
    std::set<int> gone(removed.begin(), removed.end());
    for (const IndexSet& is : pruned.index_sets) {
        CHECK_FALSE(gone.contains(is.ordinal));
        CHECK(is.positions == full.index_sets[static_cast<std::size_t>(is.ordinal - 1)].positions);
    }
}

TEST_CASE("pruning nothing returns the identical set") {
    const ClassifierSet full = enumerate_index_sets(6, 3);
    const ClassifierSet pruned = prune_classifiers(full, {});
    CHECK(pruned.size() == full.size());
    for (int i = 0; i < full.size(); ++i)
        CHECK(pruned.index_sets[static_cast<std::size_t>(i)].positions ==
              full.index_sets[static_cast<std::size_t>(i)].positions);
}

TEST_CASE("all cumulative reduction schedules give the documented sizes") {
    const ClassifierSet full2 = enumerate_index_sets(8, 2);
    CHECK(prune_classifiers(full2, test2_removals(2, Test2Group::A)).size() == 22);
    CHECK(prune_classifiers(full2, test2_removals(2, Test2Group::B)).size() == 16);
    CHECK(prune_classifiers(full2, test2_removals(2, Test2Group::C)).size() == 11);
    CHECK(prune_classifiers(full2, test2_removals(2, Test2Group::D)).size() == 6);

    const ClassifierSet full3 = enumerate_index_sets(8, 3);
    CHECK(prune_classifiers(full3, test2_removals(3, Test2Group::A)).size() == 42);
    CHECK(prune_classifiers(full3, test2_removals(3, Test2Group::B)).size() == 29);
    CHECK(prune_classifiers(full3, test2_removals(3, Test2Group::C)).size() == 23);
    CHECK(prune_classifiers(full3, test2_removals(3, Test2Group::D)).size() == 14);

    for (int N : {2, 3})
        for (Test2Group g : {Test2Group::A, Test2Group::B, Test2Group::C, Test2Group::D})
            CHECK(prune_classifiers(enumerate_index_sets(8, N), test2_removals(N, g))
                      .covers_all_positions());
}

TEST_CASE("prune rejects unknown and duplicate ordinals, and non-maximum input") {
    const ClassifierSet full = enumerate_index_sets(8, 2);
    CHECK_THROWS_AS(prune_classifiers(full, std::vector<int>{29}), std::invalid_argument);
    CHECK_THROWS_AS(prune_classifiers(full, std::vector<int>{0}), std::invalid_argument);
    CHECK_THROWS_AS(prune_classifiers(full, std::vector<int>{3, 3}), std::invalid_argument);

    const ClassifierSet pruned = prune_classifiers(full, std::vector<int>{1});
    CHECK_THROWS_AS(prune_classifiers(pruned, std::vector<int>{2}), std::invalid_argument);
}

TEST_CASE("coverage loss is reported, not hidden") {
    // Remove every pair touching position 8: ordinals {7,13,18,22,25,27,28}.
    const ClassifierSet full = enumerate_index_sets(8, 2);
    std::vector<int> removed;
    for (const IndexSet& is : full.index_sets)
        if (is.positions[0] == 8 || is.positions[1] == 8) removed.push_back(is.ordinal);
    const ClassifierSet pruned = prune_classifiers(full, removed);
    CHECK(pruned.uncovered_positions() == std::vector<int>{8});
}
