#pragma once

#include "domino/tableau.hpp"
#include "domino/weyl.hpp"

namespace domino {

// Domino insertion of w(1), ..., w(n): positive entries enter as a horizontal
// domino at the end of row 1, negative ones as a vertical domino at the foot of
// column 1.  Returns (T_L(w), T_R(w)) = (insertion tableau, recording tableau).
TableauPair insert(const SignedPermutation& w, Kind kind);

// Inverse of insert; throws std::invalid_argument on invalid pairs.
SignedPermutation extract(const TableauPair& pair);

}  // namespace domino
