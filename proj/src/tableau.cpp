#include "domino/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace domino {

using nlohmann::json;

Domino::Domino(CellCoord x, CellCoord y) : a(std::min(x, y)), b(std::max(x, y)) {}

std::vector<CellCoord> DominoTableau::cells() const {
    std::vector<CellCoord> out;
    if (kind_ == Kind::B) out.push_back({1, 1});
    for (const auto& d : dominos_) {
        out.push_back(d.a);
        out.push_back(d.b);
    }
    return out;
}

Shape DominoTableau::shape() const { return Shape::from_cells(cells()); }

LabelGrid DominoTableau::grid() const {
    int rows = 1, cols = 1;
    for (const auto& d : dominos_) {
        rows = std::max(rows, d.b.row);
        cols = std::max(cols, d.b.col);
    }
    LabelGrid g(rows, cols);
    if (kind_ == Kind::B) g.set({1, 1}, 0);
    for (int k = 1; k <= rank(); ++k) {
        const auto& d = dominos_[static_cast<std::size_t>(k - 1)];
        if (d.a.row >= 1 && d.a.col >= 1) g.set(d.a, k);
        if (d.b.row >= 1 && d.b.col >= 1) g.set(d.b, k);
    }
    return g;
}

std::vector<std::string> DominoTableau::diagnostics() const {
    std::vector<std::string> errs;
    std::set<CellCoord> used;
    if (kind_ == Kind::B) used.insert({1, 1});
    auto is_shape = [&]() {
        for (auto c : used) {
            if (c.row > 1 && !used.count({c.row - 1, c.col})) return false;
            if (c.col > 1 && !used.count({c.row, c.col - 1})) return false;
        }
        return true;
    };
    for (int k = 1; k <= rank(); ++k) {
        const auto& d = dominos_[static_cast<std::size_t>(k - 1)];
        std::string tag = "domino " + std::to_string(k) + ": ";
        if (d.a.row < 1 || d.a.col < 1 || d.b.row < 1 || d.b.col < 1) {
            errs.push_back(tag + "cell outside the quadrant");
            continue;
        }
        if (std::abs(d.a.row - d.b.row) + std::abs(d.a.col - d.b.col) != 1) {
            errs.push_back(tag + "cells are not adjacent");
            continue;
        }
        if (kind_ == Kind::B && (d.covers({1, 1}))) errs.push_back(tag + "covers the core cell (1,1)");
        if (used.count(d.a) || used.count(d.b)) {
            errs.push_back(tag + "overlaps an earlier domino");
            continue;
        }
        used.insert(d.a);
        used.insert(d.b);
        if (!is_shape()) errs.push_back("prefix 1.." + std::to_string(k) + " is not a shape");
    }
    return errs;
}

DominoTableau DominoTableau::prefix(int k) const {
    if (k < 0 || k > rank()) throw std::out_of_range("prefix length out of range");
    return DominoTableau(kind_, std::vector<Domino>(dominos_.begin(), dominos_.begin() + k));
}

DominoTableau DominoTableau::transpose() const {
    std::vector<Domino> d;
    d.reserve(dominos_.size());
    for (const auto& x : dominos_) d.push_back(x.transposed());
    return DominoTableau(kind_, std::move(d));
}

DominoTableau DominoTableau::with_labels_swapped(int k, int l) const {
    DominoTableau t = *this;
    std::swap(t.dominos_.at(static_cast<std::size_t>(k - 1)), t.dominos_.at(static_cast<std::size_t>(l - 1)));
    return t;
}

json DominoTableau::to_json() const {
    json doms = json::array();
    for (int k = 1; k <= rank(); ++k) {
        const auto& d = domino(k);
        doms.push_back({{"label", k}, {"cells", {{d.a.row, d.a.col}, {d.b.row, d.b.col}}}});
    }
    return {{"kind", std::string(1, kind_char(kind_))}, {"rank", rank()}, {"dominos", doms}};
}

DominoTableau DominoTableau::from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("rank") || !j.contains("dominos"))
        throw std::invalid_argument("tableau JSON needs \"kind\", \"rank\" and \"dominos\"");
    Kind kind = parse_kind(j.at("kind").get<std::string>());
    int rank = j.at("rank").get<int>();
    const auto& arr = j.at("dominos");
    if (!arr.is_array() || static_cast<int>(arr.size()) != rank)
        throw std::invalid_argument("tableau JSON: \"dominos\" must list exactly rank entries");
    std::vector<Domino> doms;
    for (int k = 1; k <= rank; ++k) {
        const auto& e = arr[static_cast<std::size_t>(k - 1)];
        if (e.at("label").get<int>() != k) throw std::invalid_argument("tableau JSON: dominos must be in label order");
        const auto& c = e.at("cells");
        if (!c.is_array() || c.size() != 2) throw std::invalid_argument("tableau JSON: a domino has two cells");
        doms.emplace_back(CellCoord{c[0].at(0).get<int>(), c[0].at(1).get<int>()},
                          CellCoord{c[1].at(0).get<int>(), c[1].at(1).get<int>()});
    }
    DominoTableau t(kind, std::move(doms));
    auto errs = t.diagnostics();
    if (!errs.empty()) throw std::invalid_argument("invalid tableau: " + errs.front());
    return t;
}

DominoTableau DominoTableau::decode(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed tableau text: ") + e.what());
    }
    try {
        return from_json(j);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed tableau JSON: ") + e.what());
    }
}

std::string DominoTableau::render() const {
    if (rank() == 0 && kind_ == Kind::C) return "(empty)\n";
    Shape s = shape();
    auto g = grid();
    std::size_t w = std::to_string(rank()).size();
    std::ostringstream out;
    for (int i = 1; i <= s.rows(); ++i) {
        for (int j = 1; j <= s.rho(i); ++j) {
            std::string v = std::to_string(g.at({i, j}));
            if (j > 1) out << ' ';
            out << std::string(w - v.size(), ' ') << v;
        }
        out << '\n';
    }
    return out.str();
}

std::size_t DominoTableau::hash() const {
    std::size_t h = kind_ == Kind::B ? 0x9e3779b97f4a7c15ULL : 0x7f4a7c159e3779b9ULL;
    for (const auto& d : dominos_) {
        std::size_t v = static_cast<std::size_t>(d.a.row) * 1000003u + static_cast<std::size_t>(d.a.col) * 8191u +
                        (d.horizontal() ? 1u : 2u);
        h ^= v + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

std::vector<std::string> TableauPair::diagnostics() const {
    std::vector<std::string> errs;
    for (auto& e : left.diagnostics()) errs.push_back("left " + e);
    for (auto& e : right.diagnostics()) errs.push_back("right " + e);
    if (!errs.empty()) return errs;
    if (left.kind() != right.kind()) errs.push_back("kinds differ");
    if (left.rank() != right.rank()) errs.push_back("ranks differ");
    if (errs.empty() && !(left.shape() == right.shape())) errs.push_back("shapes differ");
    return errs;
}

json TableauPair::to_json() const { return {{"left", left.to_json()}, {"right", right.to_json()}}; }

TableauPair TableauPair::from_json(const json& j) {
    if (!j.is_object() || !j.contains("left") || !j.contains("right"))
        throw std::invalid_argument("pair JSON needs \"left\" and \"right\"");
    TableauPair p{DominoTableau::from_json(j.at("left")), DominoTableau::from_json(j.at("right"))};
    auto errs = p.diagnostics();
    if (!errs.empty()) throw std::invalid_argument("invalid pair: " + errs.front());
    return p;
}

TableauPair TableauPair::decode(std::string_view text) {
    try {
        return from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed pair JSON: ") + e.what());
    }
}

std::size_t TableauPair::hash() const { return left.hash() * 0x100000001b3ULL ^ right.hash(); }

namespace {

using Seq = std::vector<Domino>;

// Dominos whose removal from the shape leaves a shape that still contains the core.
std::vector<std::pair<Domino, Shape>> removable(const Shape& s, Kind kind) {
    std::vector<std::pair<Domino, Shape>> out;
    for (int i = 1; i <= s.rows(); ++i) {
        int r = s.rho(i);
        if (r >= 2 && s.rho(i + 1) <= r - 2) {
            auto p = s.parts();
            p[static_cast<std::size_t>(i - 1)] -= 2;
            out.push_back({Domino({i, r - 1}, {i, r}), Shape(p)});
        }
        if (s.rho(i + 1) == r && s.rho(i + 2) < r) {
            auto p = s.parts();
            p[static_cast<std::size_t>(i - 1)] -= 1;
            p[static_cast<std::size_t>(i)] -= 1;
            out.push_back({Domino({i, r}, {i + 1, r}), Shape(p)});
        }
    }
    if (kind == Kind::B)
        std::erase_if(out, [](const auto& e) { return e.first.covers({1, 1}); });
    return out;
}

const std::vector<Seq>& tableaux_of(const Shape& s, Kind kind, std::map<Shape, std::vector<Seq>>& memo) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    std::vector<Seq> res;
    if (s.total() == (kind == Kind::B ? 1 : 0)) {
        if (kind == Kind::C || s == Shape({1})) res.push_back({});
    } else if (s.total() > 1 || kind == Kind::C) {
        for (const auto& [d, rest] : removable(s, kind)) {
            for (const auto& seq : tableaux_of(rest, kind, memo)) {
                res.push_back(seq);
                res.back().push_back(d);
            }
        }
    }
    std::sort(res.begin(), res.end());
    return memo.emplace(s, std::move(res)).first->second;
}

}  // namespace

std::vector<DominoTableau> enumerate_tableaux(const Shape& shape, Kind kind) {
    if (!is_tilable(shape, kind))
        throw std::invalid_argument("shape " + shape.str() + " is not tilable for kind " + kind_char(kind));
    std::map<Shape, std::vector<Seq>> memo;
    std::vector<DominoTableau> out;
    for (const auto& seq : tableaux_of(shape, kind, memo)) out.emplace_back(kind, seq);
    return out;
}

std::vector<TableauPair> enumerate_pairs(int rank, Kind kind) {
    std::vector<TableauPair> out;
    for (const auto& s : tilable_shapes(rank, kind)) {
        auto ts = enumerate_tableaux(s, kind);
        for (const auto& a : ts)
            for (const auto& b : ts) out.push_back({a, b});
    }
    return out;
}

}  // namespace domino
