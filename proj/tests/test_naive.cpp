#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "fgsym/naive.hpp"
#include "test_support.hpp"

using namespace fgsym;
using namespace fgsym::test;

TEST_CASE("subset enumeration order") {
    SUBCASE("n = 2") {
        const auto all = subsets_descending(2);
        REQUIRE(all.size() == 4);
        CHECK(all[0] == PositionSet{0, 1});
        CHECK(all[1] == PositionSet{0});
        CHECK(all[2] == PositionSet{1});
        CHECK(all[3] == PositionSet{});
    }
    SUBCASE("n = 3 starts with the full set and walks 2-subsets lexicographically") {
        const auto all = subsets_descending(3);
        REQUIRE(all.size() == 8);
        CHECK(all[0] == PositionSet{0, 1, 2});
        CHECK(all[1] == PositionSet{0, 1});
        CHECK(all[2] == PositionSet{0, 2});
        CHECK(all[3] == PositionSet{1, 2});
        CHECK(all[7] == PositionSet{});
    }
    SUBCASE("counts and monotone sizes") {
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto all = subsets_descending(n);
            CHECK(all.size() == (std::size_t{1} << n));
            for (std::size_t i = 1; i < all.size(); ++i)
                CHECK(all[i - 1].size() >= all[i].size());
        }
    }
}

TEST_CASE("reference cases") {
    const NaiveResult toy = naive_max_commutative(toy_symmetric_factor());
    REQUIRE(toy.set.has_value());
    CHECK(*toy.set == CandidateSet{0, 1});

    const NaiveResult three = naive_max_commutative(three_arg_factor());
    REQUIRE(three.set.has_value());
    CHECK(*three.set == CandidateSet{1, 2});
    CHECK(three.subsetsTested == 4); // {0,1,2}, {0,1}, {0,2}, then the hit
}

TEST_CASE("an all-unique factor has no commutative pair") {
    const NaiveResult r = naive_max_commutative(all_unique_factor(4));
    CHECK(r.status == RunStatus::Ok);
    CHECK_FALSE(r.set.has_value());
}

TEST_CASE("fast path: a fully commutative factor is settled by one subset") {
    const NaiveResult r = naive_max_commutative(constant_factor(6));
    REQUIRE(r.set.has_value());
    CHECK(r.set->size() == 6);
    CHECK(r.subsetsTested == 1);
}

TEST_CASE("maximality against exhaustive search") {
    TestRng rng{71};
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.below(4); // 2..5
        const Factor f = random_factor(n, 2, 1 + rng.below(3), rng);
        const NaiveResult r = naive_max_commutative(f);

        std::size_t bestBrute = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            PositionSet s;
            for (std::size_t p = 0; p < n; ++p)
                if (mask & (std::size_t{1} << p)) s.push_back(p);
            if (s.size() >= 2 && is_commutative_by_permutations(f, s))
                bestBrute = std::max(bestBrute, s.size());
        }
        const std::size_t got = r.set ? r.set->size() : 0;
        CHECK(got == bestBrute);
        if (r.set) CHECK(is_commutative(f, *r.set));
    }
}

TEST_CASE("mixed-range subsets are rejected without scans") {
    std::vector<RandomVariable> args{boolean_var("B1"), boolean_var("B2"), ternary_var("T1")};
    std::vector<std::string> table;
    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
            for (int t = 0; t < 3; ++t) table.push_back(std::to_string(1 + (b1 + b2) * 3 + t));
    const Factor f = build_factor("phi", std::move(args), table);

    const NaiveResult r = naive_max_commutative(f);
    REQUIRE(r.set.has_value());
    CHECK(*r.set == CandidateSet{0, 1});
    // {0,1,2}, {0,2}, {1,2} carry mixed ranges; only {0,1} is scanned.
    CHECK(r.subsetsTested == 1);
}

TEST_CASE("deadline between subsets") {
    const auto past = std::chrono::steady_clock::now() - std::chrono::milliseconds(1);
    const NaiveResult r = naive_max_commutative(constant_factor(8), past);
    CHECK(r.status == RunStatus::Timeout);
    CHECK_FALSE(r.set.has_value());
}
