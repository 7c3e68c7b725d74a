#include "domino/correspondence.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace domino {

namespace {

// Row and column lengths of a shape that grows one cell at a time.
struct Profile {
    std::vector<int> rows, cols;  // 1-indexed, padded

    explicit Profile(int n) : rows(static_cast<std::size_t>(2 * n + 4), 0), cols(rows.size(), 0) {}
    bool has(CellCoord c) const { return c.col <= rows[static_cast<std::size_t>(c.row)]; }
    void add(CellCoord c) {
        rows[static_cast<std::size_t>(c.row)]++;
        cols[static_cast<std::size_t>(c.col)]++;
    }
    int row_end(int r) const { return rows[static_cast<std::size_t>(r)]; }
    int col_end(int c) const { return cols[static_cast<std::size_t>(c)]; }
};

using Slots = std::vector<std::optional<Domino>>;  // indexed by value 1..n

// Inserts value v (horizontal iff positive) into p; returns the two cells added to the shape.
Domino insert_one(Slots& p, int v, bool horizontal, Kind kind, int n) {
    Profile u(n);
    if (kind == Kind::B) u.add({1, 1});
    for (int l = 1; l < v; ++l)
        if (p[l]) {
            u.add(p[l]->a);
            u.add(p[l]->b);
        }
    Profile before = u;
    for (int l = v + 1; l <= n; ++l)
        if (p[l]) {
            before.add(p[l]->a);
            before.add(p[l]->b);
        }
    Domino nd = horizontal ? Domino({1, u.row_end(1) + 1}, {1, u.row_end(1) + 2})
                           : Domino({u.col_end(1) + 1, 1}, {u.col_end(1) + 2, 1});
    p[v] = nd;
    u.add(nd.a);
    u.add(nd.b);
    for (int l = v + 1; l <= n; ++l) {
        if (!p[l]) continue;
        Domino d = *p[l];
        bool ha = u.has(d.a), hb = u.has(d.b);
        if (ha && hb) {
            if (d.horizontal()) {
                int r = d.a.row + 1;
                d = Domino({r, u.row_end(r) + 1}, {r, u.row_end(r) + 2});
            } else {
                int c = d.a.col + 1;
                d = Domino({u.col_end(c) + 1, c}, {u.col_end(c) + 2, c});
            }
        } else if (ha || hb) {
            CellCoord rest = ha ? d.b : d.a;
            d = d.horizontal() ? Domino(rest, {rest.row + 1, rest.col}) : Domino(rest, {rest.row, rest.col + 1});
        }
        p[l] = d;
        u.add(d.a);
        u.add(d.b);
    }
    // The recording domino is the difference between the new and old shapes.
    std::vector<CellCoord> added;
    for (int r = 1; r < static_cast<int>(u.rows.size()); ++r)
        for (int c = before.row_end(r) + 1; c <= u.row_end(r); ++c) added.push_back({r, c});
    if (added.size() != 2) throw std::logic_error("domino insertion did not add exactly one domino");
    return Domino(added[0], added[1]);
}

}  // namespace

TableauPair insert(const SignedPermutation& w, Kind kind) {
    const int n = w.rank();
    Slots p(static_cast<std::size_t>(n) + 1);
    std::vector<Domino> q;
    for (int i = 1; i <= n; ++i) {
        int x = w(i);
        q.push_back(insert_one(p, std::abs(x), x > 0, kind, n));
    }
    std::vector<Domino> left;
    for (int v = 1; v <= n; ++v) left.push_back(*p[v]);
    return {DominoTableau(kind, std::move(left)), DominoTableau(kind, std::move(q))};
}

SignedPermutation extract(const TableauPair& pair) {
    auto errs = pair.diagnostics();
    if (!errs.empty()) throw std::invalid_argument("invalid pair: " + errs.front());
    const int n = pair.left.rank();
    const Kind kind = pair.left.kind();
    Slots p(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) p[v] = pair.left.domino(v);
    std::vector<int> w(static_cast<std::size_t>(n), 0);

    auto touches = [](const Domino& d, const Domino& e) {
        return static_cast<int>(d.covers(e.a)) + static_cast<int>(d.covers(e.b));
    };

    for (int i = n; i >= 1; --i) {
        Domino delta = pair.right.domino(i);
        int found = 0;
        for (int l = n; l >= 1 && !found; --l) {
            if (!p[l]) continue;
            const Domino dp = *p[l];
            int k = touches(dp, delta);
            if (k == 0) continue;
            if (k == 2) {
                if (dp.horizontal() && dp.a.row == 1) {
                    found = l;
                } else if (dp.vertical() && dp.a.col == 1) {
                    found = -l;
                } else {
                    // Undo a full bump: the domino came from the end of the previous row / column.
                    Profile u(n);
                    if (kind == Kind::B) u.add({1, 1});
                    for (int m = 1; m < l; ++m)
                        if (p[m]) {
                            u.add(p[m]->a);
                            u.add(p[m]->b);
                        }
                    Domino d = dp.horizontal()
                                   ? Domino({dp.a.row - 1, u.row_end(dp.a.row - 1) - 1}, {dp.a.row - 1, u.row_end(dp.a.row - 1)})
                                   : Domino({u.col_end(dp.a.col - 1) - 1, dp.a.col - 1}, {u.col_end(dp.a.col - 1), dp.a.col - 1});
                    p[l] = d;
                    delta = d;
                }
                continue;
            }
            // Single overlap: dp = {c, c'} with c' in delta; the old domino is {c, s}.
            CellCoord cprime = delta.covers(dp.a) ? dp.a : dp.b;
            CellCoord c = cprime == dp.a ? dp.b : dp.a;
            CellCoord x = delta.a == cprime ? delta.b : delta.a;
            std::vector<CellCoord> cands;
            if (dp.vertical())
                cands = {{c.row, c.col - 1}, {c.row, c.col + 1}};
            else
                cands = {{c.row - 1, c.col}, {c.row + 1, c.col}};
            std::optional<CellCoord> s;
            for (auto cand : cands)
                if (std::abs(cand.row - x.row) + std::abs(cand.col - x.col) == 1) {
                    if (s) throw std::invalid_argument("ambiguous reverse bump");
                    s = cand;
                }
            if (!s) throw std::invalid_argument("pair is not in the image of insertion");
            p[l] = Domino(c, *s);
            delta = Domino(x, *s);
        }
        if (!found) throw std::invalid_argument("pair is not in the image of insertion");
        p[std::abs(found)].reset();
        w[static_cast<std::size_t>(i - 1)] = found;
    }
    return SignedPermutation(std::move(w));
}

}  // namespace domino
