#include "doctest.h"

#include <set>

#include "domino/shape.hpp"

using namespace domino;

namespace {

// Strip removable dominos greedily; the 2-core is independent of the order.
Shape core_by_stripping(Shape s) {
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 1; i <= s.rows() && !changed; ++i) {
            auto p = s.parts();
            int r = s.rho(i);
            if (r >= 2 && s.rho(i + 1) <= r - 2) {
                p[i - 1] -= 2;
                s = Shape(p);
                changed = true;
            } else if (s.rho(i + 1) == r && s.rho(i + 2) < r) {
                p[i - 1] -= 1;
                p[i] -= 1;
                s = Shape(p);
                changed = true;
            }
        }
    }
    return s;
}

// Domino tilings counted by filling cells row-major; used only for tilability.
bool tilable_by_search(const Shape& s, Kind kind) {
    auto cells = s.cells();
    std::set<CellCoord> free(cells.begin(), cells.end());
    if (kind == Kind::B) {
        if (!free.erase({1, 1})) return false;
    }
    auto rec = [&](auto&& self) -> bool {
        if (free.empty()) return true;
        CellCoord c = *free.begin();
        free.erase(c);
        for (CellCoord d : {CellCoord{c.row, c.col + 1}, CellCoord{c.row + 1, c.col}}) {
            if (free.count(d)) {
                free.erase(d);
                bool ok = self(self);
                free.insert(d);
                if (ok) {
                    free.insert(c);
                    return true;
                }
            }
        }
        free.insert(c);
        return false;
    };
    return rec(rec);
}

}  // namespace

TEST_CASE("rho and kappa read rows and columns") {
    Shape s = Shape::parse("5,3,3,1");
    CHECK(s.rho(1) == 5);
    CHECK(s.kappa(2) == 3);
    CHECK(s.rho(9) == 0);
    CHECK(s.total() == 12);
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions(n)) {
            CHECK(p.transpose().transpose() == p);
            for (int i = 1; i <= 9; ++i) CHECK(p.transpose().rho(i) == p.kappa(i));
        }
}

TEST_CASE("shape parsing rejects garbage") {
    CHECK_THROWS(Shape::parse("3,x"));
    CHECK_THROWS(Shape::parse("1,2"));
    CHECK(Shape::parse("").empty());
}

TEST_CASE("tilability matches an exhaustive tiling search") {
    CHECK_FALSE(is_tilable(Shape::parse("2,1"), Kind::C));
    CHECK(is_tilable(Shape::parse("2,2"), Kind::C));
    CHECK(is_tilable(Shape::parse("5,4,2,2"), Kind::B));
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : partitions(n)) {
            CHECK(is_tilable(p, Kind::C) == tilable_by_search(p, Kind::C));
            CHECK(is_tilable(p, Kind::B) == tilable_by_search(p, Kind::B));
        }
}

TEST_CASE("(3,2,2,1) has empty 2-core") {
    // Tiled by (1,2)-(1,3), (1,1)-(2,1), (2,2)-(3,2), (3,1)-(4,1).
    Shape s = Shape::parse("3,2,2,1");
    CHECK(tilable_by_search(s, Kind::C));
    CHECK(two_core_quotient(s).core.empty());
    CHECK(is_tilable(s, Kind::C));
}

TEST_CASE("2-core from the abacus agrees with domino stripping") {
    for (int n = 0; n <= 14; ++n)
        for (const auto& p : partitions(n)) {
            auto cq = two_core_quotient(p);
            CHECK(cq.core == core_by_stripping(p));
            CHECK(2 * cq.quotient.size() + cq.core.total() == p.total());
        }
    auto cq = two_core_quotient(Shape::parse("2,2"));
    CHECK(cq.core.empty());
    CHECK(cq.quotient.size() == 2);
    CHECK(two_core_quotient(Shape::parse("5,3,3,1")).quotient.size() == 6);
}

TEST_CASE("2-quotient is a bijection onto bipartitions for a fixed core") {
    for (int n = 1; n <= 6; ++n) {
        std::set<Bipartition> c_side, b_side;
        for (const auto& p : tilable_shapes(n, Kind::C)) c_side.insert(two_core_quotient(p).quotient);
        for (const auto& p : tilable_shapes(n, Kind::B)) b_side.insert(two_core_quotient(p).quotient);
        auto all = bipartitions(n);
        CHECK(c_side == std::set<Bipartition>(all.begin(), all.end()));
        CHECK(b_side == std::set<Bipartition>(all.begin(), all.end()));
    }
}

TEST_CASE("staircase-with-doubled-row shapes are untilable from n = 4") {
    // (m, m-1, ..., k+2, k, k, k-1, ..., 1)
    for (int m = 3; m <= 9; ++m)
        for (int k = 1; k + 2 <= m; ++k) {
            std::vector<int> p;
            for (int v = m; v >= k + 2; --v) p.push_back(v);
            p.push_back(k);
            p.push_back(k);
            for (int v = k - 1; v >= 1; --v) p.push_back(v);
            Shape s(p);
            if (s.total() > 30) continue;
            if (m == 3) {
                // (3,1,1): the hook around the type-B core
                CHECK(is_tilable(s, Kind::B));
                CHECK_FALSE(is_tilable(s, Kind::C));
                continue;
            }
            CHECK_FALSE(is_tilable(s, Kind::C));
            CHECK_FALSE(is_tilable(s, Kind::B));
        }
}

TEST_CASE("extremal positions by removal") {
    auto e = extremal_positions(Shape::parse("2,2"), Kind::C);
    REQUIRE(e.size() == 2);
    CHECK(e[0] == ExtremalPosition{{1, 2}, {2, 2}});
    CHECK(e[1] == ExtremalPosition{{2, 1}, {2, 2}});
    auto one = extremal_positions(Shape::parse("1,1"), Kind::C);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == ExtremalPosition{{1, 1}, {2, 1}});
    auto big = extremal_positions(Shape::parse("5,3,3,1"), Kind::C);
    std::set<ExtremalPosition> bs(big.begin(), big.end());
    CHECK(bs.count({{1, 4}, {1, 5}}));
    CHECK(bs.count({{2, 3}, {3, 3}}));
}

TEST_CASE("quasi-staircase recognition") {
    CHECK(quasi_staircase(Shape::parse("5,3,3,1"), Kind::C) == QuasiStaircase{StaircaseFamily::Sigma, 2, false});
    CHECK(quasi_staircase(Shape::parse("6,5,3,3,1"), Kind::C) == QuasiStaircase{StaircaseFamily::Tau, 2, false});
    CHECK_FALSE(quasi_staircase(Shape::parse("4,4,2,2"), Kind::C));
    CHECK(quasi_staircase(Shape::parse("5,3,3,1").transpose(), Kind::C) ==
          QuasiStaircase{StaircaseFamily::Sigma, 2, true});
    CHECK(quasi_staircase(Shape::parse("5,4,2,2"), Kind::B) == QuasiStaircase{StaircaseFamily::Sigma, 2, false});
    CHECK(quasi_staircase(Shape::parse("6,4,4,2,1"), Kind::B) == QuasiStaircase{StaircaseFamily::Tau, 2, false});
    CHECK(quasi_staircase_shape(StaircaseFamily::Sigma, 3, Kind::C) == Shape::parse("7,6,4,4,2,1"));
    for (int n = 2; n <= 5; ++n) {
        for (auto k : {Kind::B, Kind::C})
            for (auto f : {StaircaseFamily::Sigma, StaircaseFamily::Tau}) {
                Shape q = quasi_staircase_shape(f, n, k);
                CHECK(is_tilable(q, k));
                CHECK(quasi_staircase(q, k) == QuasiStaircase{f, n, false});
            }
        // domino counts: C n^2+n, (n+1)^2; B n^2+n, n^2+2n
        CHECK(quasi_staircase_shape(StaircaseFamily::Sigma, n, Kind::C).total() == 2 * (n * n + n));
        CHECK(quasi_staircase_shape(StaircaseFamily::Tau, n, Kind::C).total() == 2 * (n + 1) * (n + 1));
        CHECK(quasi_staircase_shape(StaircaseFamily::Sigma, n, Kind::B).total() == 2 * (n * n + n) + 1);
        CHECK(quasi_staircase_shape(StaircaseFamily::Tau, n, Kind::B).total() == 2 * (n * n + 2 * n) + 1);
    }
}

TEST_CASE("symbols and specialness") {
    CHECK(is_special_symbol(symbol_of({Shape(), Shape()})));
    auto sym = symbol_of({Shape::parse("1"), Shape::parse("1")});
    CHECK(sym.top == std::vector<int>{0, 2});
    CHECK(sym.bottom == std::vector<int>{1});
    CHECK(is_special_symbol(sym));
    CHECK_THROWS(is_special(Shape::parse("2,1"), Kind::C));
    // Exactly one special shape in the rank-6 family sharing a two-sided cell.
    int count = 0;
    for (auto s : {"4,4,2,2", "4,3,3,2", "5,3,3,1", "5,4,2,1"}) count += is_special(Shape::parse(s), Kind::C);
    CHECK(count == 1);
    CHECK(is_special(Shape::parse("4,4,2,2"), Kind::C));
}

TEST_CASE("hook length counts") {
    CHECK(count_standard_tableaux(Shape::parse("3,2")) == 5);
    CHECK(count_standard_tableaux(Shape()) == 1);
    CHECK(count_standard_bitableaux({Shape::parse("1"), Shape::parse("1")}) == 2);
    // sum over bipartitions of f^2 = |W(B_n)|
    for (int n = 1; n <= 5; ++n) {
        std::int64_t s = 0, order = 1;
        for (int i = 1; i <= n; ++i) order *= 2 * i;
        for (auto& bp : bipartitions(n)) s += count_standard_bitableaux(bp) * count_standard_bitableaux(bp);
        CHECK(s == order);
    }
}
