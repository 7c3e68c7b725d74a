#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "domino/correspondence.hpp"
#include "domino/cycles.hpp"

using namespace domino;

namespace {

std::vector<DominoTableau> all_tableaux(int n, Kind kind) {
    std::vector<DominoTableau> out;
    for (auto& s : tilable_shapes(n, kind))
        for (auto& t : enumerate_tableaux(s, kind)) out.push_back(t);
    return out;
}

}  // namespace

TEST_CASE("rank one: the single cycle touches the corner") {
    auto t = all_tableaux(1, Kind::C).front();
    auto cs = cycles(t);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].labels == std::vector<int>{1});
    CHECK(cs[0].core);
    CHECK_THROWS(move_through(t, cs[0]));
    CHECK(open_cycles(t).empty());
}

TEST_CASE("cycles partition the labels; moves are involutions") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 1; n <= 4; ++n)
            for (auto& t : all_tableaux(n, kind)) {
                auto cs = cycles(t);
                std::vector<int> seen;
                for (auto& c : cs) seen.insert(seen.end(), c.labels.begin(), c.labels.end());
                std::sort(seen.begin(), seen.end());
                std::vector<int> want(n);
                std::iota(want.begin(), want.end(), 1);
                CHECK(seen == want);
                for (auto& c : cs) {
                    if (c.core) continue;
                    auto m = move_through(t, c);
                    CHECK(m.valid());
                    if (!c.open) {
                        CHECK(m.shape() == t.shape());
                    } else {
                        CHECK(c.removed.size() == 1);
                        CHECK(c.added.size() == 1);
                        CHECK(m.shape().total() == t.shape().total());
                        CHECK_FALSE(m.shape() == t.shape());
                    }
                    auto back = cycles(m);
                    auto it = std::find_if(back.begin(), back.end(), [&](auto& b) { return b.labels == c.labels; });
                    REQUIRE(it != back.end());
                    CHECK(it->open == c.open);
                    CHECK(move_through(m, *it) == t);
                }
                // disjoint cycles commute (rank <= 3)
                if (n <= 3)
                    for (auto& a : cs)
                        for (auto& b : cs) {
                            if (a.core || b.core || a.labels == b.labels) continue;
                            auto ab = move_through(move_through(t, a), b);
                            auto ba = move_through(move_through(t, b), a);
                            CHECK(ab == ba);
                            CHECK(ab == move_through(t, std::vector<Cycle>{a, b}));
                        }
            }
}

TEST_CASE("cycle moves preserve the number of tableaux per shape class") {
    // open moves are a bijection between tableaux; check injectivity on rank 4
    for (auto kind : {Kind::C, Kind::B}) {
        std::set<std::pair<DominoTableau, std::vector<int>>> images;
        int count = 0;
        for (auto& t : all_tableaux(4, kind))
            for (auto& c : open_cycles(t)) {
                images.insert({move_through(t, c), c.labels});
                ++count;
            }
        CHECK(static_cast<int>(images.size()) == count);
    }
}

TEST_CASE("extended open cycles") {
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 1; n <= 4; ++n) {
            auto g = enumerate_group(n);
            for (auto& w : g) {
                auto p = insert(w, kind);
                auto ex = extended_open_cycles(p);
                std::set<int> ul, ur;
                for (auto& e : ex) {
                    for (int l : e.left_labels) CHECK(ul.insert(l).second);
                    for (int l : e.right_labels) CHECK(ur.insert(l).second);
                }
                const int r = static_cast<int>(ex.size());
                std::set<TableauPair> seen;
                for (int mask = 0; mask < (1 << r); ++mask) {
                    std::vector<ExtendedOpenCycle> sub;
                    for (int i = 0; i < r; ++i)
                        if (mask >> i & 1) sub.push_back(ex[i]);
                    auto q = move_pair_through(p, sub);
                    CHECK(q.valid());
                    seen.insert(q);
                    // moving back through the same label sets restores the pair
                    if (n <= 3) CHECK(move_pair_through(q, sub) == p);
                }
                CHECK(static_cast<int>(seen.size()) == (1 << r));
            }
        }
    auto one = insert(SignedPermutation::parse("1"), Kind::C);
    CHECK(extended_open_cycles(one).empty());
    CHECK(move_pair_through(one, {}) == one);
    CHECK_THROWS(move_pair_through(one, {ExtendedOpenCycle{{1}, {1}}}));
}
