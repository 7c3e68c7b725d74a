#pragma once

#include <vector>

#include "domino/tableau.hpp"

namespace domino {

// Fixed squares are those with i + j odd, in both kinds.  Each domino has one
// fixed and one variable square; D'(k) keeps the fixed square and moves the
// variable one according to the neighbouring labels.
std::vector<Domino> moved_positions(const DominoTableau& t);  // D'(1..n)

struct Cycle {
    std::vector<int> labels;  // ascending
    bool open = false;
    bool core = false;  // touches (1,1); such cycles cannot be moved through
    std::vector<CellCoord> removed;  // cells of the shape lost by the move
    std::vector<CellCoord> added;    // cells gained
    auto operator<=>(const Cycle&) const = default;
};

std::vector<Cycle> cycles(const DominoTableau& t);  // ordered by least label
std::vector<Cycle> open_cycles(const DominoTableau& t);  // non-core open cycles

// Replaces D(l) by D'(l) for every l in the cycle.  Throws for core cycles and
// for label sets that are not a cycle of t.
DominoTableau move_through(const DominoTableau& t, const Cycle& c);
DominoTableau move_through(const DominoTableau& t, const std::vector<Cycle>& cs);

struct ExtendedOpenCycle {
    std::vector<int> left_labels;
    std::vector<int> right_labels;
    auto operator<=>(const ExtendedOpenCycle&) const = default;
};

// Components of non-core open cycles of both tableaux linked by shared changed
// cells, kept when moving through them changes both shapes in the same way.
std::vector<ExtendedOpenCycle> extended_open_cycles(const TableauPair& p);
TableauPair move_pair_through(const TableauPair& p, const std::vector<ExtendedOpenCycle>& s);

}  // namespace domino
