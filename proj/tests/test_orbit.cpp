#include "doctest.h"

#include <algorithm>

#include "domino/correspondence.hpp"
#include "domino/orbit.hpp"

using namespace domino;

TEST_CASE("rank one: no operator applies") {
    auto p = insert(SignedPermutation::parse("1"), Kind::C);
    CHECK(orbit(p) == std::vector<TableauPair>{p});
    CHECK(orbit(p, kTransitiveFamily | kFamilyEnlarged) == std::vector<TableauPair>{p});
}

TEST_CASE("rank two (2,2): orbit is every left tableau") {
    auto tabs = enumerate_tableaux(Shape({2, 2}), Kind::C);
    REQUIRE(tabs.size() == 2);
    for (auto& r : tabs) {
        auto o = orbit({tabs[0], r});
        REQUIRE(o.size() == 2);
        for (std::size_t i = 0; i < 2; ++i) CHECK(o[i] == TableauPair{tabs[i], r});
    }
    // U^L alone realises it
    auto one = apply_sequence(parse_sequence("UL:fwd"), {tabs[0], tabs[0]});
    auto other = apply_sequence(parse_sequence("UL:rev"), {tabs[0], tabs[0]});
    CHECK(one.size() + other.size() == 1);
}

TEST_CASE("BFS orbits agree with the component sizes of the transitivity check") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 2; n <= 4; ++n)
            for (auto& s : tilable_shapes(n, kind)) {
                auto rep = check_transitivity(s, kind, kFamilyT | kFamilyU);
                auto tabs = enumerate_tableaux(s, kind);
                for (std::size_t k = 0; k < tabs.size(); k += 3) {
                    auto o = orbit({tabs[0], tabs[k]}, kFamilyT | kFamilyU);
                    for (auto& q : o) CHECK(q.right == tabs[k]);
                    auto& sizes = rep.per_right[k].orbit_sizes;
                    CHECK(std::find(sizes.begin(), sizes.end(), static_cast<int>(o.size())) != sizes.end());
                }
            }
}

TEST_CASE("transitivity at rank <= 4, both kinds") {
    for (auto kind : {Kind::C, Kind::B}) {
        auto rep = check_campaign(kind, 4);
        CHECK(rep.pass());
        auto shared = check_campaign(kind, 4, kTransitiveFamily, {.shared_left_graph = true});
        REQUIRE(shared.shapes.size() == rep.shapes.size());
        for (std::size_t i = 0; i < rep.shapes.size(); ++i)
            CHECK(shared.shapes[i].per_right[0].orbit_sizes == rep.shapes[i].per_right[0].orbit_sizes);
    }
}

TEST_CASE("S-family is needed on the quasi-staircases") {
    for (auto [kind, shape] : {std::pair{Kind::C, Shape({5, 3, 3, 1})}, std::pair{Kind::B, Shape({5, 4, 2, 2})}}) {
        TransitivityOptions opt;
        opt.threads = 4;
        auto full = check_transitivity(shape, kind, kTransitiveFamily, opt);
        CHECK(full.pass());
        auto without = check_transitivity(shape, kind, kFamilyT | kFamilyU, opt);
        CHECK_FALSE(without.pass());
        CHECK(without.max_orbits() >= 2);
        auto o = orbit({full.per_right[0].right, full.per_right[0].right}, kFamilyT | kFamilyU);
        CHECK(static_cast<int>(o.size()) < full.tableaux);
    }
}

TEST_CASE("untilable shapes are rejected") { CHECK_THROWS(check_transitivity(Shape({3, 2, 1}), Kind::C)); }
