#include "doctest.h"

#include <algorithm>
#include <bit>
#include <set>

#include "domino/isotypic.hpp"

using namespace domino;

namespace {

const CellStructure& structure(int n, Kind kind) {
    static std::map<std::pair<int, Kind>, std::unique_ptr<std::pair<KLTable, std::unique_ptr<CellStructure>>>> memo;
    auto& slot = memo[{n, kind}];
    if (!slot) {
        KLOptions opt;
        opt.use_cache = false;
        slot = std::make_unique<std::pair<KLTable, std::unique_ptr<CellStructure>>>(KLTable(n, opt), nullptr);
        slot->second = std::make_unique<CellStructure>(slot->first, kind);
    }
    return *slot->second;
}

}  // namespace

TEST_CASE("rank one: the single intersection is {e}") {
    const auto& cs = structure(1, Kind::C);
    auto all = intersections(cs);
    REQUIRE(all.size() == 2);
    for (auto& i : all) {
        CHECK(i.elements.size() == 1);
        CHECK(i.special == i.elements[0]);
        auto v = all_r_sigma(cs, i);
        REQUIRE(v.size() == 1);
        CHECK(v[0].coefficients == std::vector<std::pair<int, int>>{{i.special, 1}});
    }
}

TEST_CASE("intersections: unique special element, power-of-two sizes, bijective parametrization") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 1; n <= 3; ++n) {
            const auto& cs = structure(n, kind);
            std::set<int> covered;
            for (auto& i : intersections(cs)) {
                CHECK(i.special >= 0);
                CHECK(std::has_single_bit(i.elements.size()));
                auto cp = cycle_parametrization(cs, i);
                CHECK(cp.inside);
                CHECK(cp.bijective);
                CHECK(cp.element_of[0] == i.special);
                CHECK(cs.cells().two_sided_of[i.elements.front()] == cs.cells().two_sided_of[i.elements.back()]);
                covered.insert(i.elements.begin(), i.elements.end());
                auto checked = intersection(cs, i.left_cell, i.right_cell);
                CHECK(checked.elements == i.elements);
            }
            CHECK(static_cast<int>(covered.size()) == cs.kl().size());
        }
}

TEST_CASE("empty intersections are rejected") {
    const auto& cs = structure(2, Kind::C);
    const auto& cells = cs.cells();
    bool found = false;
    for (std::size_t l = 0; l < cells.left.size() && !found; ++l)
        for (std::size_t r = 0; r < cells.right.size() && !found; ++r) {
            bool meets = false;
            for (int w : cells.left[l].elements) meets |= cells.right_of[w] == static_cast<int>(r);
            if (!meets) {
                CHECK_THROWS_AS(intersection(cs, static_cast<int>(l), static_cast<int>(r)), std::invalid_argument);
                found = true;
            }
        }
    CHECK(found);
}

TEST_CASE("r_sigma: x has coefficient +1 and unreachable shapes throw") {
    const auto& cs = structure(3, Kind::C);
    for (auto& i : intersections(cs)) {
        for (auto& v : all_r_sigma(cs, i)) {
            CHECK(v.coefficients.size() == i.elements.size());
            for (auto [w, s] : v.coefficients)
                if (w == i.special) CHECK(s == 1);
            auto again = r_sigma(cs, i, v.sigma);
            CHECK(again.coefficients == v.coefficients);
        }
        CHECK_THROWS_AS(r_sigma(cs, i, Shape({7})), std::invalid_argument);
    }
}

TEST_CASE("R_sigma generates the predicted irreducibles, ranks 1-3") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 1; n <= 3; ++n) {
            auto rep = verify_isotypic(structure(n, kind), 2);
            INFO("kind " << kind_char(kind) << " n " << n);
            for (auto& f : rep.findings) MESSAGE(f);
            CHECK(rep.pass());
            CHECK(rep.vectors == structure(n, kind).kl().size());
        }
}

TEST_CASE("|C cap R| equals the number of common constituents (independent decomposition)") {
    const auto& cs = structure(3, Kind::B);
    const int n = 3;
    for (auto& i : intersections(cs)) {
        auto c = decompose(cs.character(i.left_cell), n);
        int r_left = cs.cells().left_of[cs.kl().inverse_index(i.elements.front())];
        auto r = decompose(cs.character(r_left), n);
        int common = 0;
        for (auto& [bp, m] : c) {
            CHECK(m == 1);
            common += std::any_of(r.begin(), r.end(), [&](auto& e) { return e.first == bp; });
        }
        CHECK(common == static_cast<int>(i.elements.size()));
    }
}

TEST_CASE("group wall crossing restricted to the same shape is U^L") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 2; n <= 4; ++n) {
            const auto& cs = structure(n, kind);
            for (int w = 0; w < cs.kl().size(); ++w)
                for (bool fwd : {true, false}) {
                    const auto& p = cs.pair(w);
                    std::vector<DominoTableau> same;
                    for (int y : group_wall_crossing(cs, fwd, w))
                        if (cs.pair(y).right.shape() == p.right.shape()) {
                            CHECK(cs.pair(y).left == p.left);
                            same.push_back(cs.pair(y).right);
                        }
                    std::sort(same.begin(), same.end());
                    auto want = U_left(fwd, p.right);
                    std::sort(want.begin(), want.end());
                    CHECK(same == want);
                }
        }
}

TEST_CASE("linear maps: empty sequence is the identity, single steps are equivariant") {
    const auto& cs = structure(3, Kind::C);
    const int nc = static_cast<int>(cs.cells().left.size());
    for (int c = 0; c < nc; ++c) {
        auto id = operator_linear_map(cs, {}, c, c);
        for (int r = 0; r < cs.module(c).dim(); ++r)
            for (int k = 0; k < cs.module(c).dim(); ++k) CHECK(id[r][k] == (r == k ? 1 : 0));
        CHECK(is_equivariant(cs, id, c, c));
    }
    auto t = OperatorId::same_length(2, 3);
    for (int c = 0; c < nc; ++c)
        for (int d = 0; d < nc; ++d) {
            auto phi = operator_linear_map(cs, {t}, c, d);
            CHECK(is_equivariant(cs, phi, c, d));
        }
}

TEST_CASE("a non-equivariant map is detected") {
    const auto& cs = structure(2, Kind::C);
    for (int c = 0; c < static_cast<int>(cs.cells().left.size()); ++c) {
        const int d = cs.module(c).dim();
        if (d < 2) continue;
        IntMatrix m(d, std::vector<std::int64_t>(d, 0));
        m[0][0] = 1;
        CHECK_FALSE(is_equivariant(cs, m, c, c));
        return;
    }
    FAIL("no cell of dimension >= 2");
}

TEST_CASE("operator transfers between cells, ranks 2-3") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 2; n <= 3; ++n) {
            auto rep = verify_transfer(structure(n, kind));
            INFO("kind " << kind_char(kind) << " n " << n);
            for (auto& f : rep.findings) MESSAGE(f);
            CHECK(rep.pass());
            CHECK(rep.step_maps > 0);
            CHECK(rep.transfers > 0);
        }
}

TEST_CASE("rank-6 quasi-staircase cell: four elements and the expected signs") {
    auto rep = c6_combinatorial_check();
    for (auto& f : rep.findings) MESSAGE(f);
    CHECK(rep.pass());
    CHECK(rep.signs.size() == 4);
    // rows are pairwise orthogonal and contain the trivial row
    std::vector<std::vector<int>> rows;
    for (auto& [s, r] : rep.signs) rows.push_back(r);
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < rows.size(); ++b) {
            int dot = 0;
            for (int k = 0; k < 4; ++k) dot += rows[a][k] * rows[b][k];
            CHECK(dot == (a == b ? 4 : 0));
        }
    CHECK(rep.signs.at(Shape({4, 4, 2, 2}).str()) == std::vector<int>{1, 1, 1, 1});
}
