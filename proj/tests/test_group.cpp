#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

using namespace zsum;

TEST_CASE("group spec validation") {
    CHECK_THROWS_AS(GroupSpec(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec({4, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec({-2}), std::invalid_argument);

    const GroupSpec G({2, 4});
    CHECK(G.order() == 8);
    CHECK(G.exponent() == 4);
    CHECK_FALSE(G.is_cyclic());
    CHECK(GroupSpec::cyclic(6).exponent() == 6);
    CHECK(GroupSpec({2, 3}).exponent() == 6);
    CHECK(GroupSpec::cyclic(1).order() == 1);
}

TEST_CASE("addition examples") {
    const GroupSpec z5 = GroupSpec::cyclic(5);
    CHECK(add(GroupElement::cyclic(3), GroupElement::cyclic(4), z5) == GroupElement::cyclic(2));
    CHECK(add(GroupElement::cyclic(3), z5.zero(), z5) == GroupElement::cyclic(3));

    const GroupSpec z23({2, 3});
    CHECK(add(GroupElement({{1, 2}}), GroupElement({{1, 2}}), z23) == GroupElement({{0, 1}}));

    CHECK_THROWS_AS(add(GroupElement::cyclic(1), GroupElement({{1, 1}}), z5),
                    std::invalid_argument);
}

TEST_CASE("scaling examples") {
    const GroupSpec z5 = GroupSpec::cyclic(5);
    CHECK(scale(3, GroupElement::cyclic(2), z5) == GroupElement::cyclic(1));
    CHECK(scale(0, GroupElement::cyclic(4), GroupSpec::cyclic(6)) == GroupElement::cyclic(0));
    CHECK(scale(4, GroupElement({{1, 1}}), GroupSpec({2, 3})) == GroupElement({{0, 1}}));
}

TEST_CASE("group laws, exhaustive over small groups") {
    for (const GroupSpec& G :
         {GroupSpec::cyclic(36), GroupSpec({2, 18}), GroupSpec({6, 6}), GroupSpec({2, 3, 5})}) {
        const int q = G.order();
        for (int i = 0; i < q; ++i) {
            CHECK(G.add_idx(i, 0) == i);
            CHECK(G.add_idx(i, G.neg_idx(i)) == 0);
            CHECK(G.index_of(G.element_at(i)) == i);
            for (int j = 0; j < q; ++j) CHECK(G.add_idx(i, j) == G.add_idx(j, i));
        }
        // associativity on a full grid is cubic; sample the diagonal-ish triples
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) {
                const int k = (i * 7 + j * 3 + 1) % q;
                CHECK(G.add_idx(G.add_idx(i, j), k) == G.add_idx(i, G.add_idx(j, k)));
            }
    }
}

TEST_CASE("scale is determined by the weight modulo the exponent") {
    std::mt19937_64 rng(42);
    for (const GroupSpec& G : {GroupSpec::cyclic(12), GroupSpec({2, 4}), GroupSpec({3, 3})}) {
        const int m = G.exponent();
        for (int trial = 0; trial < 200; ++trial) {
            const long long a = static_cast<long long>(rng() % (6 * m + 1)) - 3 * m;
            const int x = static_cast<int>(rng() % G.order());
            CHECK(G.scale_idx(a, x) == G.scale_idx(((a % m) + m) % m, x));
        }
    }
}

TEST_CASE("weighted orbit examples") {
    const GroupSpec z5 = GroupSpec::cyclic(5);
    const GroupSpec z6 = GroupSpec::cyclic(6);
    const GroupSpec z4 = GroupSpec::cyclic(4);
    auto orbit = [](const GroupSpec& G, std::initializer_list<long long> ws, int x) {
        std::vector<int> out;
        for (const auto& g : weighted_orbit(GroupElement::cyclic(x), WeightSet(ws, G), G))
            out.push_back(g.residues[0]);
        return out;
    };
    CHECK(orbit(z5, {1, 4}, 2) == std::vector<int>{2, 3});
    CHECK(orbit(z6, {2, 5}, 3) == std::vector<int>{0, 3});
    CHECK(orbit(z4, {1, 3}, 0) == std::vector<int>{0});
}

TEST_CASE("units") {
    CHECK(units_of(1) == std::vector<int>{0});
    CHECK(units_of(2) == std::vector<int>{1});
    CHECK(units_of(8) == std::vector<int>{1, 3, 5, 7});
    CHECK(units_of(7) == std::vector<int>{1, 2, 3, 4, 5, 6});
}
