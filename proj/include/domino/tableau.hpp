#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "domino/shape.hpp"

namespace domino {

// Two edge-adjacent cells, stored with a < b in (row, col) order.
struct Domino {
    CellCoord a;
    CellCoord b;

    Domino() = default;
    Domino(CellCoord x, CellCoord y);

    bool horizontal() const { return a.row == b.row; }
    bool vertical() const { return a.col == b.col; }
    bool covers(CellCoord c) const { return a == c || b == c; }
    Domino transposed() const { return Domino(a.transposed(), b.transposed()); }
    auto operator<=>(const Domino&) const = default;
};

// Dense label lookup for one tableau: -1 = empty, 0 = type-B core, k = domino k.
class LabelGrid {
public:
    LabelGrid(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), -1) {}
    int at(CellCoord c) const {
        if (c.row < 1 || c.col < 1 || c.row > rows_ || c.col > cols_) return -1;
        return data_[static_cast<std::size_t>((c.row - 1) * cols_ + c.col - 1)];
    }
    void set(CellCoord c, int v) { data_[static_cast<std::size_t>((c.row - 1) * cols_ + c.col - 1)] = v; }

private:
    int rows_, cols_;
    std::vector<int> data_;
};

class DominoTableau {
public:
    DominoTableau() = default;
    DominoTableau(Kind kind, std::vector<Domino> dominos) : kind_(kind), dominos_(std::move(dominos)) {}

    static DominoTableau empty(Kind kind) { return DominoTableau(kind, {}); }

    Kind kind() const { return kind_; }
    int rank() const { return static_cast<int>(dominos_.size()); }
    const std::vector<Domino>& dominos() const { return dominos_; }
    const Domino& domino(int label) const { return dominos_.at(static_cast<std::size_t>(label - 1)); }
    void set_domino(int label, Domino d) { dominos_.at(static_cast<std::size_t>(label - 1)) = d; }

    std::vector<CellCoord> cells() const;  // includes the type-B core
    Shape shape() const;                   // throws if cells do not form a shape
    LabelGrid grid() const;

    std::vector<std::string> diagnostics() const;  // violated invariants; empty when valid
    bool valid() const { return diagnostics().empty(); }

    DominoTableau prefix(int k) const;
    DominoTableau transpose() const;
    DominoTableau with_labels_swapped(int k, int l) const;

    nlohmann::json to_json() const;
    static DominoTableau from_json(const nlohmann::json& j);  // validates
    std::string encode() const { return to_json().dump(); }
    static DominoTableau decode(std::string_view text);
    std::string render() const;

    std::size_t hash() const;
    auto operator<=>(const DominoTableau&) const = default;

private:
    Kind kind_ = Kind::C;
    std::vector<Domino> dominos_;
};

struct TableauPair {
    DominoTableau left;
    DominoTableau right;

    std::vector<std::string> diagnostics() const;
    bool valid() const { return diagnostics().empty(); }
    TableauPair swapped() const { return {right, left}; }
    TableauPair transpose() const { return {left.transpose(), right.transpose()}; }

    nlohmann::json to_json() const;
    static TableauPair from_json(const nlohmann::json& j);
    std::string encode() const { return to_json().dump(); }
    static TableauPair decode(std::string_view text);

    std::size_t hash() const;
    auto operator<=>(const TableauPair&) const = default;
};

struct TableauHash {
    std::size_t operator()(const DominoTableau& t) const { return t.hash(); }
};
struct PairHash {
    std::size_t operator()(const TableauPair& p) const { return p.hash(); }
};

// All standard tableaux of the shape, sorted lexicographically by their domino sequences.
std::vector<DominoTableau> enumerate_tableaux(const Shape& shape, Kind kind);
std::vector<TableauPair> enumerate_pairs(int rank, Kind kind);  // all same-shape pairs

}  // namespace domino
