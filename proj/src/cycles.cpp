#include "domino/cycles.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace domino {

namespace {

bool is_fixed(CellCoord c) { return (c.row + c.col) % 2 == 1; }

DominoTableau apply_moves(const DominoTableau& t, const std::vector<Domino>& dp, const std::vector<int>& labels) {
    DominoTableau r = t;
    for (int l : labels) r.set_domino(l, dp[static_cast<std::size_t>(l - 1)]);
    return r;
}

std::vector<Cycle> cycles_with(const DominoTableau& t, const std::vector<Domino>& dp) {
    const int n = t.rank();
    auto g = t.grid();
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int k = 1; k <= n; ++k)
        for (auto c : {dp[k - 1].a, dp[k - 1].b}) {
            int l = g.at(c);
            if (l > 0 && l != k) parent[find(k)] = find(l);
        }
    std::vector<Cycle> out;
    std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
    for (int k = 1; k <= n; ++k) {
        int r = find(k);
        if (index[r] < 0) {
            index[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[index[r]].labels.push_back(k);
    }
    for (auto& c : out) {
        std::set<CellCoord> before, after;
        for (int l : c.labels) {
            const auto& d = t.domino(l);
            const auto& e = dp[static_cast<std::size_t>(l - 1)];
            before.insert({d.a, d.b});
            after.insert({e.a, e.b});
            if (d.covers({1, 1}) || e.covers({1, 1})) c.core = true;
        }
        std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(c.removed));
        std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(c.added));
        c.open = !c.removed.empty() || !c.added.empty();
    }
    return out;
}

}  // namespace

std::vector<Domino> moved_positions(const DominoTableau& t) {
    const int n = t.rank();
    auto g = t.grid();
    auto T = [&](CellCoord s) {
        if (s.row <= 0 || s.col <= 0) return 0;
        int v = g.at(s);
        return v < 0 ? INT_MAX : v;
    };
    std::vector<Domino> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const auto& d = t.domino(k);
        CellCoord f = is_fixed(d.a) ? d.a : d.b;
        CellCoord v = f == d.a ? d.b : d.a;
        const int i = f.row, j = f.col;
        CellCoord N{i - 1, j}, S{i + 1, j}, W{i, j - 1}, E{i, j + 1}, NE{i - 1, j + 1}, SW{i + 1, j - 1};
        CellCoord vp;
        if (v == S)
            vp = T(NE) < k ? E : N;
        else if (v == E)
            vp = T(SW) < k ? S : W;
        else if (v == N)
            vp = T(SW) > k ? W : S;
        else
            vp = T(NE) > k ? N : E;
        out.emplace_back(f, vp);
    }
    return out;
}

std::vector<Cycle> cycles(const DominoTableau& t) { return cycles_with(t, moved_positions(t)); }

std::vector<Cycle> open_cycles(const DominoTableau& t) {
    auto cs = cycles(t);
    std::erase_if(cs, [](const Cycle& c) { return !c.open || c.core; });
    return cs;
}

DominoTableau move_through(const DominoTableau& t, const Cycle& c) { return move_through(t, std::vector<Cycle>{c}); }

DominoTableau move_through(const DominoTableau& t, const std::vector<Cycle>& cs) {
    auto dp = moved_positions(t);
    auto mine = cycles_with(t, dp);
    std::vector<int> labels;
    for (const auto& c : cs) {
        auto it = std::find_if(mine.begin(), mine.end(), [&](const Cycle& m) { return m.labels == c.labels; });
        if (it == mine.end()) throw std::invalid_argument("not a cycle of this tableau");
        if (it->core) throw std::invalid_argument("core cycles cannot be moved through");
        labels.insert(labels.end(), c.labels.begin(), c.labels.end());
    }
    return apply_moves(t, dp, labels);
}

std::vector<ExtendedOpenCycle> extended_open_cycles(const TableauPair& p) {
    struct Node {
        bool left;
        const Cycle* cyc;
    };
    auto la = open_cycles(p.left), lb = open_cycles(p.right);
    std::vector<Node> nodes;
    for (auto& c : la) nodes.push_back({true, &c});
    for (auto& c : lb) nodes.push_back({false, &c});
    const int m = static_cast<int>(nodes.size());
    std::vector<std::set<CellCoord>> changed(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        changed[i].insert(nodes[i].cyc->removed.begin(), nodes[i].cyc->removed.end());
        changed[i].insert(nodes[i].cyc->added.begin(), nodes[i].cyc->added.end());
    }
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (auto c : changed[i])
                if (changed[j].count(c)) {
                    parent[find(i)] = find(j);
                    break;
                }
    std::vector<ExtendedOpenCycle> out;
    for (int r = 0; r < m; ++r) {
        if (find(r) != r) continue;
        ExtendedOpenCycle e;
        std::multiset<CellCoord> rem[2], add[2];
        for (int i = 0; i < m; ++i) {
            if (find(i) != r) continue;
            const int side = nodes[i].left ? 0 : 1;
            auto& labels = nodes[i].left ? e.left_labels : e.right_labels;
            labels.insert(labels.end(), nodes[i].cyc->labels.begin(), nodes[i].cyc->labels.end());
            rem[side].insert(nodes[i].cyc->removed.begin(), nodes[i].cyc->removed.end());
            add[side].insert(nodes[i].cyc->added.begin(), nodes[i].cyc->added.end());
        }
        auto net = [&](int side) {
            std::set<CellCoord> r0(rem[side].begin(), rem[side].end()), a0(add[side].begin(), add[side].end());
            std::vector<CellCoord> lost, gained;
            std::set_difference(r0.begin(), r0.end(), a0.begin(), a0.end(), std::back_inserter(lost));
            std::set_difference(a0.begin(), a0.end(), r0.begin(), r0.end(), std::back_inserter(gained));
            return std::make_pair(lost, gained);
        };
        if (net(0) != net(1)) continue;
        std::sort(e.left_labels.begin(), e.left_labels.end());
        std::sort(e.right_labels.begin(), e.right_labels.end());
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

TableauPair move_pair_through(const TableauPair& p, const std::vector<ExtendedOpenCycle>& s) {
    if (s.empty()) return p;
    auto mine = extended_open_cycles(p);
    std::vector<int> la, lb;
    for (const auto& e : s) {
        if (std::find(mine.begin(), mine.end(), e) == mine.end())
            throw std::invalid_argument("not an extended open cycle of this pair");
        la.insert(la.end(), e.left_labels.begin(), e.left_labels.end());
        lb.insert(lb.end(), e.right_labels.begin(), e.right_labels.end());
    }
    return {apply_moves(p.left, moved_positions(p.left), la), apply_moves(p.right, moved_positions(p.right), lb)};
}

}  // namespace domino
