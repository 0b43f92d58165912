#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_util.hpp"
#include "zsum/oracle.hpp"
#include "zsum/text.hpp"

using namespace zsum;

namespace {
std::vector<int> row_elems(const SumProfile& p, int k) { return p.row_set(k).to_indices(); }
}  // namespace

TEST_CASE("profile examples") {
    const GroupSpec z5 = GroupSpec::cyclic(5);

    const SumProfile p1 = sum_profile(parse_sequence("1,2", z5), WeightSet({1}, z5), z5, 2);
    CHECK(row_elems(p1, 0) == std::vector<int>{0});
    CHECK(row_elems(p1, 1) == std::vector<int>{1, 2});
    CHECK(row_elems(p1, 2) == std::vector<int>{3});

    // weights {2,3} on (1,1): pairs 2+2, 2+3, 3+3 give 4, 0, 1
    const Sequence s11 = parse_sequence("1,1", z5);
    const WeightSet w23({2, 3}, z5);
    const SumProfile p2 = sum_profile(s11, w23, z5, 2);
    CHECK(row_elems(p2, 1) == std::vector<int>{2, 3});
    CHECK(row_elems(p2, 2) == std::vector<int>{0, 1, 4});
    CHECK(p2 == oracle_weighted_sums(s11, w23, z5));

    const SumProfile pe = sum_profile(Sequence(), WeightSet({1}, z5), z5, 3);
    CHECK(row_elems(pe, 0) == std::vector<int>{0});
    for (int k = 1; k <= 3; ++k) CHECK(row_elems(pe, k).empty());

    const GroupSpec z2 = GroupSpec::cyclic(2);
    const SumProfile p3 = oracle_weighted_sums(parse_sequence("1,1", z2), WeightSet({1}, z2), z2);
    CHECK(row_elems(p3, 1) == std::vector<int>{1});
    CHECK(row_elems(p3, 2) == std::vector<int>{0});
}

TEST_CASE("zero-sum predicates") {
    const GroupSpec z5 = GroupSpec::cyclic(5);
    CHECK(has_weighted_zero_sum(parse_sequence("0,3", z5), WeightSet({3}, z5), z5));
    CHECK_FALSE(has_weighted_zero_sum(parse_sequence("1,2", z5), WeightSet({1}, z5), z5));
    CHECK(has_weighted_zero_sum(parse_sequence("1,1", z5), WeightSet({2, 3}, z5), z5));

    CHECK(has_exact_length_weighted_zero_sum(parse_sequence("0,3", z5), WeightSet({1, 2}, z5),
                                             z5, 1));
    const GroupSpec z3 = GroupSpec::cyclic(3);
    CHECK(has_exact_length_weighted_zero_sum(parse_sequence("1,1,1", z3), WeightSet({1}, z3), z3,
                                             3));
    const GroupSpec z4 = GroupSpec::cyclic(4);
    CHECK_FALSE(has_exact_length_weighted_zero_sum(parse_sequence("1,1,1,2", z4),
                                                   WeightSet({1}, z4), z4, 4));
    // |S| < n is never satisfiable
    CHECK_FALSE(has_exact_length_weighted_zero_sum(parse_sequence("0", z4), WeightSet({1}, z4),
                                                   z4, 2));
}

TEST_CASE("zero weight collapses both predicates") {
    const GroupSpec z6 = GroupSpec::cyclic(6);
    const WeightSet A({0, 2}, z6);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int len = 1 + static_cast<int>(rng() % 6);
        std::vector<int> idx;
        for (int i = 0; i < len; ++i) idx.push_back(static_cast<int>(rng() % 6));
        const Sequence S = Sequence::from_indices(idx, z6);
        CHECK(has_weighted_zero_sum(S, A, z6));
        for (int k = 1; k <= len; ++k) CHECK(has_exact_length_weighted_zero_sum(S, A, z6, k));
    }
}

TEST_CASE("appending entries never clears a profile cell") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const GroupSpec G = GroupSpec::cyclic(n);
        std::vector<long long> ws{1 + static_cast<long long>(rng() % (n - 1))};
        if (rng() % 2) ws.push_back(1 + static_cast<long long>(rng() % (n - 1)));
        const WeightSet A(ws, G);
        SumProfile p(G, 6);
        for (int step = 0; step < 6; ++step) {
            const SumProfile prev = p;
            p.extend_in_place(static_cast<int>(rng() % n), A);
            for (int k = 0; k <= 6; ++k)
                CHECK(prev.row_set(k).subset_of(p.row_set(k)));
        }
    }
}

TEST_CASE("collapsed row agrees with the full table") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const GroupSpec G = GroupSpec::cyclic(n);
        const WeightSet A({1 + static_cast<long long>(rng() % (n - 1)),
                           1 + static_cast<long long>(rng() % (n - 1))},
                          G);
        const int len = static_cast<int>(rng() % 7);
        std::vector<int> idx;
        for (int i = 0; i < len; ++i) idx.push_back(static_cast<int>(rng() % n));
        const Sequence S = Sequence::from_indices(idx, G);

        const SumProfile p = sum_profile(S, A, G, len);
        bool table_zero = false;
        for (int k = 1; k <= len; ++k) table_zero = table_zero || p.contains(k, 0);
        CHECK(has_weighted_zero_sum(S, A, G) == table_zero);
    }
}

TEST_CASE("profile matches the enumeration oracle on a small exhaustive grid") {
    for (int n = 2; n <= 5; ++n) {
        const GroupSpec G = GroupSpec::cyclic(n);
        testutil::for_each_weight_subset(n, 2, [&](const std::vector<long long>& ws) {
            const WeightSet A(ws, G);
            testutil::for_each_multiset(n, 4, [&](const std::vector<int>& idx) {
                const Sequence S = Sequence::from_indices(idx, G);
                CHECK(sum_profile(S, A, G, S.length()) == oracle_weighted_sums(S, A, G));
            });
        });
    }
}

TEST_CASE("budgets and refusals") {
    const GroupSpec z6 = GroupSpec::cyclic(6);
    CHECK_THROWS_AS(SumProfile(z6, 100, /*cell_budget=*/500), std::length_error);
    CHECK_THROWS_AS(sum_profile(Sequence(), WeightSet({1}, z6), z6, -1), std::invalid_argument);

    std::vector<int> idx(15, 1);
    CHECK_THROWS_AS(
        oracle_weighted_sums(Sequence::from_indices(idx, z6), WeightSet({1}, z6), z6),
        std::length_error);
    CHECK_THROWS_AS(
        oracle_weighted_sums(parse_sequence("1", z6), WeightSet({1, 2, 3, 4, 5}, z6), z6),
        std::length_error);
}
