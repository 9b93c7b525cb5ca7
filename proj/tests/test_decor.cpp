#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <thread>

#include "fgsym/decor.hpp"
#include "fgsym/naive.hpp"
#include "test_support.hpp"

using namespace fgsym;
using namespace fgsym::test;

TEST_CASE("identical-value groups within a bucket class") {
    const Factor f = three_arg_factor();
    const auto classes = bucket_partition(f, {0, 1, 2});

    SUBCASE("the [2,1] class holds one group of two") {
        const auto groups = partition_identical_groups(f, classes[1]);
        REQUIRE(groups.size() == 1);
        CHECK(groups[0] == std::vector<std::size_t>{1, 2}); // both rows carry "2"
    }
    SUBCASE("singleton classes hold no groups") {
        CHECK(partition_identical_groups(f, classes[0]).empty());
        CHECK(partition_identical_groups(f, classes[3]).empty());
    }
    SUBCASE("a constant class is one group") {
        const Factor c = constant_factor(2);
        const auto all = bucket_partition(c, {});
        const auto groups = partition_identical_groups(c, all[0]);
        REQUIRE(groups.size() == 1);
        CHECK(groups[0].size() == 4);
    }
}

TEST_CASE("element-wise intersection") {
    using Opt = std::optional<int>;
    // true=0, false=1 in the Boolean range order used throughout.
    SUBCASE("common prefix survives, differing positions empty") {
        const auto out = elementwise_intersection({{0, 0, 1}, {0, 1, 0}});
        CHECK(out == std::vector<Opt>{Opt{0}, Opt{}, Opt{}});
    }
    SUBCASE("second reference pair") {
        const auto out = elementwise_intersection({{1, 0, 1}, {1, 1, 0}});
        CHECK(out == std::vector<Opt>{Opt{1}, Opt{}, Opt{}});
    }
    SUBCASE("identical inputs have no empty positions") {
        const auto out = elementwise_intersection({{1, 0, 1}, {1, 0, 1}});
        CHECK(out == std::vector<Opt>{Opt{1}, Opt{0}, Opt{1}});
    }
    SUBCASE("length mismatch throws") {
        CHECK_THROWS_AS(elementwise_intersection({{0, 1}, {0, 1, 0}}), FgError);
    }
}

TEST_CASE("candidate_from_group") {
    const Factor f = three_arg_factor();
    SUBCASE("the reference group yields {R2, R3}") {
        const auto candidate = candidate_from_group(f, {1, 2});
        REQUIRE(candidate.has_value());
        CHECK(*candidate == CandidateSet{1, 2});
    }
    SUBCASE("rows differing in a single position yield nothing") {
        // Rows 0 and 4 differ only at position 0.
        CHECK_FALSE(candidate_from_group(f, {0, 4}).has_value());
    }
    SUBCASE("a full [2,1] group of a constant factor yields all positions") {
        const Factor c = constant_factor(3);
        // Rows (t,t,f), (t,f,t), (f,t,t) = indices 1, 2, 4.
        const auto candidate = candidate_from_group(c, {1, 2, 4});
        REQUIRE(candidate.has_value());
        CHECK(*candidate == CandidateSet{0, 1, 2});
    }
}

TEST_CASE("antichain insertion") {
    CandidateAntichain a;
    CHECK(a.insert({1, 2}));
    CHECK_FALSE(a.insert({1, 2}));
    CHECK_FALSE(a.insert({1, 2})); // idempotent
    SUBCASE("subsumed insertions are dropped") {
        CHECK(a.insert({3, 4, 5}));
        CHECK_FALSE(a.insert({3, 4}));
        CHECK(a.size() == 2);
    }
    SUBCASE("a strictly larger set evicts its subsets") {
        CHECK(a.insert({1, 2, 3}));
        CHECK(a.size() == 1);
        CHECK(a.sets()[0] == CandidateSet{1, 2, 3});
    }
}

TEST_CASE("intersect_antichains") {
    CandidateAntichain whole;
    whole.insert({0, 1, 2});
    CandidateAntichain pair;
    pair.insert({1, 2});

    SUBCASE("first-round intersection") {
        const auto out = intersect_antichains(whole, pair);
        REQUIRE(out.size() == 1);
        CHECK(out.sets()[0] == CandidateSet{1, 2});
    }
    SUBCASE("self intersection is stable") {
        const auto out = intersect_antichains(pair, pair);
        REQUIRE(out.size() == 1);
        CHECK(out.sets()[0] == CandidateSet{1, 2});
    }
    SUBCASE("disjoint sets intersect away") {
        CandidateAntichain left, right;
        left.insert({0, 1});
        right.insert({2, 3});
        CHECK(intersect_antichains(left, right).empty());
    }
}

TEST_CASE("decor on the three-argument reference factor") {
    const Factor f = three_arg_factor();
    const DecorResult r = decor(f);
    CHECK(r.status == RunStatus::Ok);
    REQUIRE(r.candidates.size() == 1);
    CHECK(r.candidates.sets()[0] == CandidateSet{1, 2});

    CHECK(r.stats.bucketsVisited == 2);
    CHECK(r.stats.bucketsSkipped == 2);
    CHECK(r.stats.groupsFormed == 2);
    CHECK(r.stats.intersectionsComputed == 2);
    CHECK(r.stats.candidatePeak == 1);
}

TEST_CASE("decor on an all-unique factor returns nothing") {
    const DecorResult r = decor(all_unique_factor(4));
    CHECK(r.status == RunStatus::Ok);
    CHECK(r.candidates.empty());
}

TEST_CASE("decor on the toy factor") {
    const DecorResult r = decor(toy_symmetric_factor());
    REQUIRE(r.candidates.size() == 1);
    CHECK(r.candidates.sets()[0] == CandidateSet{0, 1});
}

TEST_CASE("decor respects a tiny deadline") {
    const Factor f = constant_factor(10);
    const auto past = std::chrono::steady_clock::now() - std::chrono::milliseconds(1);
    const DecorResult r = decor(f, past);
    CHECK(r.status == RunStatus::Timeout);
    CHECK(r.candidates.empty());
}

TEST_CASE("decor handles mixed ranges per group") {
    // phi(B1, B2, T1, T2) where the value depends on (count of trues in
    // {B1,B2}, count histogram of {T1,T2}): commutative within each range
    // group but not across.
    std::vector<RandomVariable> args{boolean_var("B1"), boolean_var("B2"), ternary_var("T1"),
                                     ternary_var("T2")};
    std::vector<std::string> table;
    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
            for (int t1 = 0; t1 < 3; ++t1)
                for (int t2 = 0; t2 < 3; ++t2) {
                    const int boolCount = b1 + b2;
                    const int lo = std::min(t1, t2), hi = std::max(t1, t2);
                    table.push_back(std::to_string(1 + boolCount * 100 + lo * 10 + hi));
                }
    const Factor f = build_factor("phi", std::move(args), table);

    const DecorResult r = decor(f);
    REQUIRE(r.candidates.size() == 2);
    CandidateAntichain expected;
    expected.insert({0, 1});
    expected.insert({2, 3});
    CHECK(r.candidates.sets()[0] == CandidateSet{0, 1});
    CHECK(r.candidates.sets()[1] == CandidateSet{2, 3});
}

TEST_CASE("upper bound on commutative subset size") {
    CHECK(commutative_upper_bound(three_arg_factor(), {0, 1, 2}) == 2);
    CHECK(commutative_upper_bound(all_unique_factor(3), {0, 1, 2}) == 1);
    for (std::size_t n = 2; n <= 6; ++n)
        CHECK(commutative_upper_bound(constant_factor(n),
                                      [&] {
                                          PositionSet all(n);
                                          std::iota(all.begin(), all.end(), std::size_t{0});
                                          return all;
                                      }()) == n);
}

TEST_CASE("max_candidate") {
    CandidateAntichain empty;
    CHECK_FALSE(max_candidate(empty).has_value());

    CandidateAntichain one;
    one.insert({1, 2});
    CHECK(*max_candidate(one) == CandidateSet{1, 2});

    CandidateAntichain tie;
    tie.insert({2, 3});
    tie.insert({0, 1});
    CHECK(*max_candidate(tie) == CandidateSet{0, 1});

    CandidateAntichain sizes;
    sizes.insert({0, 1});
    sizes.insert({2, 3, 4});
    CHECK(*max_candidate(sizes) == CandidateSet{2, 3, 4});
}

TEST_CASE("small-corpus agreement with the exhaustive baseline") {
    TestRng rng{101};
    int agreements = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng.below(5);     // 2..6
        const std::size_t r = 2 + rng.below(2);     // 2..3
        const std::size_t pool = 1 + rng.below(4);  // duplicates likely
        const Factor f = random_factor(n, r, pool, rng);

        const DecorResult d = decor(f);
        const NaiveResult nv = naive_max_commutative(f);
        const auto best = max_candidate(d.candidates);

        const std::size_t decorSize = best ? best->size() : 0;
        const std::size_t naiveSize = nv.set ? nv.set->size() : 0;
        CHECK(decorSize == naiveSize);
        for (const auto& s : d.candidates.sets()) CHECK(is_commutative(f, s));

        // Work bound from the candidate-generation analysis.
        std::size_t tableSize = f.table_size();
        CHECK(d.stats.groupsFormed <= tableSize / 2);
        ++agreements;
    }
    CHECK(agreements == 120);
}

TEST_CASE("a larger generated instance matches the oracle") {
    const Factor f = [&] {
        // Value depends on the histogram of the first five arguments plus
        // the raw values of the rest; maximal commutative set is {0..4}.
        std::vector<RandomVariable> args;
        for (std::size_t i = 1; i <= 10; ++i) args.push_back(boolean_var("R" + std::to_string(i)));
        std::vector<std::string> table;
        for (std::size_t row = 0; row < 1024; ++row) {
            int count = 0;
            for (std::size_t p = 0; p < 5; ++p) count += static_cast<int>(row >> (9 - p)) & 1;
            table.push_back(std::to_string(1 + count * 32 + (row & 31)));
        }
        return build_factor("phi", std::move(args), table);
    }();

    const DecorResult d = decor(f);
    const auto best = max_candidate(d.candidates);
    REQUIRE(best.has_value());
    CHECK(*best == CandidateSet{0, 1, 2, 3, 4});

    const NaiveResult nv = naive_max_commutative(f);
    REQUIRE(nv.set.has_value());
    CHECK(*nv.set == *best);
}

TEST_CASE("bound compliance per range group") {
    TestRng rng{55};
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.below(4);
        const Factor f = random_factor(n, 2, 1 + rng.below(3), rng);
        const auto groups = range_groups(f);
        const DecorResult d = decor(f);
        for (const auto& group : groups) {
            std::size_t largestInGroup = 0;
            for (const auto& s : d.candidates.sets())
                if (std::includes(group.begin(), group.end(), s.begin(), s.end()))
                    largestInGroup = std::max(largestInGroup, s.size());
            if (largestInGroup > 0)
                CHECK(largestInGroup <= commutative_upper_bound(f, group));
        }
    }
}
