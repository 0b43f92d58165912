#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "zsum/profile.hpp"
#include "zsum/text.hpp"

using namespace zsum;

TEST_CASE("sequence accessors") {
    const GroupSpec z6 = GroupSpec::cyclic(6);
    const Sequence S = parse_sequence("3,0,3,1,3", z6);

    CHECK(S.length() == 5);
    CHECK(S.entries().front() == GroupElement::cyclic(0));  // stored sorted
    CHECK(S.multiplicity(GroupElement::cyclic(3)) == 3);
    CHECK(S.multiplicity(GroupElement::cyclic(5)) == 0);
    CHECK(S.max_multiplicity() == 3);
    CHECK(S.support().size() == 3);
    CHECK(S.total(z6) == GroupElement::cyclic(4));  // 3+3+3+1 = 10
    CHECK(S == parse_sequence("0,1,3,3,3", z6));

    const Sequence empty;
    CHECK(empty.length() == 0);
    CHECK(empty.max_multiplicity() == 0);

    CHECK(parse_sequence("0,1", z6).subsequence_of(S));
    CHECK_FALSE(parse_sequence("1,1", z6).subsequence_of(S));
}

TEST_CASE("weight set reduction") {
    const GroupSpec z8 = GroupSpec::cyclic(8);
    CHECK(WeightSet({1, -1}, z8).residues() == std::vector<int>{1, 7});
    CHECK(WeightSet({9, 1, 17}, z8).residues() == std::vector<int>{1});
    CHECK(WeightSet({-8}, z8).contains_zero());
    CHECK_FALSE(WeightSet({1, 2}, z8).contains_zero());
    CHECK_THROWS_AS(WeightSet(std::vector<long long>{}, z8), std::invalid_argument);

    // reduction happens modulo the exponent, not the order
    const GroupSpec z24({2, 4});
    CHECK(WeightSet({5}, z24).residues() == std::vector<int>{1});
    CHECK(WeightSet::units(GroupSpec::cyclic(10)).residues() == std::vector<int>{1, 3, 7, 9});
}

TEST_CASE("unit canonical form examples") {
    const GroupSpec z5 = GroupSpec::cyclic(5);
    CHECK(canonicalize_under_units(parse_sequence("2,4", z5), z5) == parse_sequence("1,2", z5));
    const GroupSpec z6 = GroupSpec::cyclic(6);
    CHECK(canonicalize_under_units(parse_sequence("0,0,3", z6), z6) ==
          parse_sequence("0,0,3", z6));
    const GroupSpec z22({2, 2});
    const Sequence zeros(std::vector<GroupElement>(3, z22.zero()), z22);
    CHECK(canonicalize_under_units(zeros, z22) == zeros);
}

TEST_CASE("unit canonical form is idempotent and orbit-constant") {
    for (int n = 1; n <= 8; ++n) {
        const GroupSpec G = GroupSpec::cyclic(n);
        testutil::for_each_multiset(n, 4, [&](const std::vector<int>& idx) {
            const Sequence S = Sequence::from_indices(idx, G);
            const Sequence canon = canonicalize_under_units(S, G);
            CHECK(canonicalize_under_units(canon, G) == canon);
            for (int u : units_of(n)) {
                std::vector<int> scaled;
                for (int i : idx) scaled.push_back(static_cast<int>((1LL * u * i) % n));
                CHECK(canonicalize_under_units(Sequence::from_indices(scaled, G), G) == canon);
            }
        });
    }
}

TEST_CASE("both predicates are invariant under unit scaling") {
    // This is the correctness condition for pruning search roots by
    // unit-orbit representatives.
    for (int n = 2; n <= 8; ++n) {
        const GroupSpec G = GroupSpec::cyclic(n);
        testutil::for_each_weight_subset(n, 2, [&](const std::vector<long long>& ws) {
            const WeightSet A(ws, G);
            testutil::for_each_multiset(n, 4, [&](const std::vector<int>& idx) {
                if (idx.empty()) return;
                const Sequence S = Sequence::from_indices(idx, G);
                const bool any_len = has_weighted_zero_sum(S, A, G);
                const bool exact = has_exact_length_weighted_zero_sum(S, A, G, S.length());
                for (int u : units_of(n)) {
                    if (u == 1) continue;
                    std::vector<int> scaled;
                    for (int i : idx) scaled.push_back(static_cast<int>((1LL * u * i) % n));
                    const Sequence uS = Sequence::from_indices(scaled, G);
                    CHECK(has_weighted_zero_sum(uS, A, G) == any_len);
                    CHECK(has_exact_length_weighted_zero_sum(uS, A, G, uS.length()) == exact);
                }
            });
        });
    }
}
