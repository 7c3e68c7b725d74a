#include "doctest.h"

#include <map>
#include <set>

#include "domino/correspondence.hpp"

using namespace domino;

TEST_CASE("rank one") {
    auto p = insert(SignedPermutation::parse("1"), Kind::C);
    CHECK(p.left.domino(1) == Domino({1, 1}, {1, 2}));
    CHECK(p.right == p.left);
    auto m = insert(SignedPermutation::parse("-1"), Kind::C);
    CHECK(m.left.domino(1) == Domino({1, 1}, {2, 1}));
    CHECK(m.right == m.left);
    auto b = insert(SignedPermutation::parse("1"), Kind::B);
    CHECK(b.left.domino(1) == Domino({1, 2}, {1, 3}));
    auto bm = insert(SignedPermutation::parse("-1"), Kind::B);
    CHECK(bm.left.domino(1) == Domino({2, 1}, {3, 1}));
}

TEST_CASE("bijection onto same-shape pairs, round trips, inverse swaps") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 0; n <= 4; ++n) {
            auto pairs = enumerate_pairs(n, kind);
            std::set<TableauPair> all(pairs.begin(), pairs.end());
            std::set<TableauPair> image;
            auto g = n == 0 ? std::vector<SignedPermutation>{SignedPermutation::identity(0)} : enumerate_group(n);
            CHECK(pairs.size() == g.size());  // sum over shapes of (#tableaux)^2 = 2^n n!
            for (auto& w : g) {
                auto p = insert(w, kind);
                CHECK(p.valid());
                CHECK(all.count(p));
                image.insert(p);
                CHECK(extract(p) == w);
                CHECK(insert(inverse(w), kind) == p.swapped());
                if (n <= 3) CHECK(extract(p.swapped()) == inverse(w));
            }
            CHECK(image.size() == g.size());
            for (auto& p : pairs) CHECK(insert(extract(p), kind) == p);
        }
}

TEST_CASE("extract of the rank-0 pair is the identity") {
    TableauPair p{DominoTableau::empty(Kind::C), DominoTableau::empty(Kind::C)};
    CHECK(extract(p).rank() == 0);
    CHECK(extract(p).is_identity());
}

TEST_CASE("extract rejects invalid pairs") {
    auto a = insert(SignedPermutation::parse("1,2"), Kind::C);
    auto b = insert(SignedPermutation::parse("-1,-2"), Kind::C);
    CHECK_THROWS(extract({a.left, b.right}));
}

TEST_CASE("rank 5 spot check") {
    auto g = enumerate_group(5);
    for (std::size_t i = 0; i < g.size(); i += 37)
        for (auto kind : {Kind::C, Kind::B}) {
            auto p = insert(g[i], kind);
            CHECK(p.valid());
            CHECK(extract(p) == g[i]);
            CHECK(insert(inverse(g[i]), kind) == p.swapped());
        }
}
