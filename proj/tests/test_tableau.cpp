#include "doctest.h"

#include <set>

#include "domino/tableau.hpp"

using namespace domino;

namespace {

// Count standard tableaux by adding dominos one at a time in every possible way,
// without the memoized removal recursion used by the library.
long count_by_growth(const Shape& target, Kind kind) {
    std::set<CellCoord> cur;
    if (kind == Kind::B) cur.insert({1, 1});
    std::set<CellCoord> goal;
    for (auto c : target.cells()) goal.insert(c);
    auto is_shape = [&] {
        for (auto c : cur) {
            if (c.row > 1 && !cur.count({c.row - 1, c.col})) return false;
            if (c.col > 1 && !cur.count({c.row, c.col - 1})) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self) -> long {
        if (cur.size() == goal.size()) return 1;
        long total = 0;
        for (auto c : goal) {
            if (cur.count(c)) continue;
            for (CellCoord d : {CellCoord{c.row, c.col + 1}, CellCoord{c.row + 1, c.col}}) {
                if (!goal.count(d) || cur.count(d)) continue;
                cur.insert(c);
                cur.insert(d);
                if (is_shape()) total += self(self);
                cur.erase(c);
                cur.erase(d);
            }
        }
        return total;
    };
    return rec(rec);
}

DominoTableau make(Kind k, std::vector<std::pair<CellCoord, CellCoord>> cells) {
    std::vector<Domino> d;
    for (auto& [a, b] : cells) d.emplace_back(a, b);
    return DominoTableau(k, d);
}

}  // namespace

TEST_CASE("validate") {
    CHECK(make(Kind::C, {{{1, 1}, {1, 2}}}).valid());
    auto bad = make(Kind::C, {{{2, 1}, {2, 2}}, {{1, 1}, {1, 2}}});
    CHECK_FALSE(bad.valid());
    CHECK(bad.diagnostics().front().find("prefix") != std::string::npos);
    CHECK_FALSE(make(Kind::B, {{{1, 1}, {1, 2}}}).valid());
    CHECK(make(Kind::B, {{{1, 2}, {1, 3}}}).valid());
    CHECK_FALSE(make(Kind::C, {{{1, 1}, {2, 2}}}).valid());
    // (5,3,3,1) with 6 vertical at the end of the doubled rows and 5 horizontal above it
    auto t = make(Kind::C, {{{1, 1}, {2, 1}},
                            {{1, 2}, {1, 3}},
                            {{3, 1}, {4, 1}},
                            {{2, 2}, {3, 2}},
                            {{1, 4}, {1, 5}},
                            {{2, 3}, {3, 3}}});
    CHECK(t.valid());
    CHECK(t.shape() == Shape::parse("5,3,3,1"));
}

TEST_CASE("enumeration of small shapes") {
    auto two = enumerate_tableaux(Shape::parse("2,2"), Kind::C);
    REQUIRE(two.size() == 2);
    CHECK(two[0].domino(1).horizontal());
    CHECK(two[1].domino(1).vertical());
    auto hook = enumerate_tableaux(Shape::parse("3,1"), Kind::C);
    REQUIRE(hook.size() == 1);
    CHECK(hook[0].domino(1) == Domino({1, 1}, {2, 1}));
    CHECK(hook[0].domino(2) == Domino({1, 2}, {1, 3}));
    CHECK(enumerate_tableaux(Shape::parse("2"), Kind::C).size() == 1);
    CHECK_THROWS(enumerate_tableaux(Shape::parse("2,1"), Kind::C));
}

TEST_CASE("enumeration: valid, distinct, sorted, and counted by the growth oracle") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 0; n <= 5; ++n)
            for (const auto& s : tilable_shapes(n, kind)) {
                auto ts = enumerate_tableaux(s, kind);
                CHECK(std::is_sorted(ts.begin(), ts.end()));
                CHECK(std::set<DominoTableau>(ts.begin(), ts.end()).size() == ts.size());
                for (auto& t : ts) {
                    CHECK(t.valid());
                    CHECK(t.shape() == s);
                }
                CHECK(static_cast<long>(ts.size()) == count_by_growth(s, kind));
            }
}

TEST_CASE("tableau count equals bitableau count of the 2-quotient") {
    for (int total = 0; total <= 14; ++total)
        for (const auto& s : partitions(total))
            for (auto kind : {Kind::C, Kind::B}) {
                if (!is_tilable(s, kind)) continue;
                auto q = two_core_quotient(s).quotient;
                CHECK(static_cast<std::int64_t>(enumerate_tableaux(s, kind).size()) ==
                      count_standard_bitableaux(q));
            }
}

TEST_CASE("prefix and transpose") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 0; n <= 3; ++n)
            for (const auto& s : tilable_shapes(n, kind))
                for (const auto& t : enumerate_tableaux(s, kind)) {
                    CHECK(t.prefix(t.rank()) == t);
                    CHECK(t.prefix(0).rank() == 0);
                    for (int k = 0; k <= t.rank(); ++k) {
                        auto p = t.prefix(k);
                        CHECK(p.valid());
                        for (int i = 1; i <= p.shape().rows(); ++i) CHECK(p.shape().rho(i) <= s.rho(i));
                    }
                    CHECK(t.transpose().transpose() == t);
                    CHECK(t.transpose().valid());
                    CHECK(t.transpose().shape() == s.transpose());
                }
    auto h = make(Kind::C, {{{1, 1}, {1, 2}}});
    CHECK(h.transpose().domino(1) == Domino({1, 1}, {2, 1}));
    CHECK_THROWS(h.prefix(2));
}

TEST_CASE("encode / decode") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 0; n <= 3; ++n)
            for (const auto& s : tilable_shapes(n, kind))
                for (const auto& t : enumerate_tableaux(s, kind)) CHECK(DominoTableau::decode(t.encode()) == t);
    CHECK_THROWS(DominoTableau::decode("{}"));
    CHECK_THROWS(DominoTableau::decode("not json"));
    CHECK(DominoTableau::empty(Kind::C).encode() == R"({"dominos":[],"kind":"C","rank":0})");
    CHECK_THROWS(DominoTableau::decode(R"({"kind":"C","rank":1,"dominos":[{"label":1,"cells":[[1,1],[2,2]]}]})"));
    auto p = enumerate_pairs(2, Kind::C);
    CHECK(p.size() == 8);
    for (auto& x : p) CHECK(TableauPair::decode(x.encode()) == x);
}

TEST_CASE("render") {
    auto t = enumerate_tableaux(Shape::parse("3"), Kind::B).front();
    CHECK(t.render() == "0 1 1\n");
    CHECK(DominoTableau::empty(Kind::C).render() == "(empty)\n");
}
