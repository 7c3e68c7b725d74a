#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domino {

enum class Kind { B, C };

char kind_char(Kind k);
Kind parse_kind(std::string_view text);

struct CellCoord {
    int row = 1;
    int col = 1;
    auto operator<=>(const CellCoord&) const = default;
    CellCoord transposed() const { return {col, row}; }
};

// Partition with row 1 on top.  Parts are kept weakly decreasing and positive;
// the empty shape has no parts.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);

    static Shape parse(std::string_view text);  // "5,3,3,1"; "" is the empty shape
    static Shape from_cells(const std::vector<CellCoord>& cells);  // throws unless cells form a shape

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int total() const { return total_; }
    bool empty() const { return parts_.empty(); }

    int rho(int i) const;    // row length, 0 past the last row
    int kappa(int j) const;  // column length
    bool contains(CellCoord c) const { return c.row >= 1 && c.col >= 1 && c.col <= rho(c.row); }

    Shape transpose() const;
    std::vector<CellCoord> cells() const;  // row-major
    std::string str() const;

    auto operator<=>(const Shape& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Shape& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

struct Bipartition {
    Shape first;
    Shape second;
    int size() const { return first.total() + second.total(); }
    std::string str() const { return "(" + first.str() + ";" + second.str() + ")"; }
    auto operator<=>(const Bipartition&) const = default;
};

struct Symbol {
    std::vector<int> top;     // m+1 entries
    std::vector<int> bottom;  // m entries
};

struct ExtremalPosition {
    CellCoord a;
    CellCoord b;
    bool horizontal() const { return a.row == b.row; }
    auto operator<=>(const ExtremalPosition&) const = default;
};

struct CoreQuotient {
    Shape core;
    Bipartition quotient;
};

bool is_tilable(const Shape& s, Kind kind);
CoreQuotient two_core_quotient(const Shape& s);
std::vector<ExtremalPosition> extremal_positions(const Shape& s, Kind kind);

enum class StaircaseFamily { Sigma, Tau };

struct QuasiStaircase {
    StaircaseFamily family;
    int n;
    bool transposed;
    auto operator<=>(const QuasiStaircase&) const = default;
};

// Untransposed member of a family; n >= 2.
Shape quasi_staircase_shape(StaircaseFamily f, int n, Kind kind);
std::optional<QuasiStaircase> quasi_staircase(const Shape& s, Kind kind);

Symbol symbol_of(const Bipartition& bp);
bool is_special_symbol(const Symbol& sym);
bool is_special(const Shape& s, Kind kind);  // throws on untilable shapes

std::vector<Shape> partitions(int n);  // reverse lexicographic
std::vector<Bipartition> bipartitions(int n);
std::vector<Shape> tilable_shapes(int rank, Kind kind);  // shapes of 2*rank (+1 for B) cells

std::int64_t count_standard_tableaux(const Shape& s);  // hook length formula
std::int64_t count_standard_bitableaux(const Bipartition& bp);

}  // namespace domino
