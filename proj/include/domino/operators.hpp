#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domino/cycles.hpp"
#include "domino/tableau.hpp"

namespace domino {

// tau-invariant as ascending simple-root indices: 1 iff domino 1 is vertical;
// i >= 2 iff domino i starts in a lower row than domino i-1.
std::vector<int> tau(const DominoTableau& t);
bool in_tau(const DominoTableau& t, int i);

struct OperatorId {
    enum class Type { SameLength, DiffLengthL, SFamily, Enlarged };
    Type type = Type::SameLength;
    int i = 0, j = 0;          // SameLength: T_{alpha_i alpha_j}
    bool forward = true;       // DiffLengthL: U^L_{a1 a2} (fwd) or U^L_{a2 a1} (rev)
    bool prime = false;        // S / Enlarged: primed family (second quasi-staircase family)
    int n = 0;                 // S / Enlarged: family index >= 2
    bool transposed = false;   // S / Enlarged: transposed variant

    static OperatorId same_length(int i, int j) { return {Type::SameLength, i, j}; }
    static OperatorId u_left(bool forward) { return {Type::DiffLengthL, 0, 0, forward}; }
    static OperatorId s_family(bool prime, int n, bool transposed) {
        return {Type::SFamily, 0, 0, true, prime, n, transposed};
    }
    static OperatorId enlarged(bool prime, int n, bool transposed) {
        return {Type::Enlarged, 0, 0, true, prime, n, transposed};
    }

    // "T:2,3", "UL:fwd", "UL:rev", "S:2", "S':2", "tS:2", "tS':2", "EnlT:2", "EnlT':2", "tEnlT:2", "tEnlT':2"
    static OperatorId parse(std::string_view text);
    std::string str() const;
    OperatorId reversed() const;  // the operator undoing this one (self for S-family)
    auto operator<=>(const OperatorId&) const = default;
};

using OperatorSequence = std::vector<OperatorId>;
OperatorSequence parse_sequence(std::string_view text);  // comma separated; "T:2,3" keeps its comma
std::string to_string(const OperatorSequence& seq);

enum class UlMode {
    Closure,  // recipe images plus the reversed-recipe preimages (reversibility closure)
    Recipe    // box / hook recipe only
};
enum class SMode {
    Positional,  // only the two largest prefix dominos are constrained
    Strict       // prefix must equal the canonical filling or its interchange
};
enum class EnlargedReading {
    ContainsD2,  // second image unless the extended cycle of d1 contains d2
    Literal      // the cycle of d1 always contains d1: never a second image
};

struct OperatorOptions {
    UlMode ul_mode = UlMode::Closure;
    SMode s_mode = SMode::Positional;
    EnlargedReading enlarged_reading = EnlargedReading::ContainsD2;
};

std::optional<TableauPair> apply_T_same_length(int i, int j, const TableauPair& p);
std::vector<TableauPair> apply_U_left(bool forward, const TableauPair& p, UlMode mode = UlMode::Closure);
std::optional<TableauPair> apply_S(const OperatorId& id, const TableauPair& p, SMode mode = SMode::Positional);
std::vector<TableauPair> apply_enlarged(const OperatorId& id, const TableauPair& p,
                                        EnlargedReading reading = EnlargedReading::ContainsD2);

// Left-tableau-only forms (the right tableau is never read by T, U^L or S).
std::optional<DominoTableau> T_same_length(int i, int j, const DominoTableau& t);
std::vector<DominoTableau> U_left(bool forward, const DominoTableau& t, UlMode mode = UlMode::Closure);
std::optional<DominoTableau> S_family(const OperatorId& id, const DominoTableau& t, SMode mode = SMode::Positional);

// Images of one operator (empty when undefined), sorted and deduplicated.
std::vector<TableauPair> apply(const OperatorId& op, const TableauPair& p, const OperatorOptions& opt = {});
std::vector<TableauPair> apply_sequence(const OperatorSequence& seq, const TableauPair& p,
                                        const OperatorOptions& opt = {});

// Quasi-staircase data used by the S-family.
struct SConfiguration {
    Shape region;       // quasi-staircase shape (transposed if requested)
    int dominos = 0;    // number of dominos in the region
    Domino vertical;    // position of the largest domino in the canonical filling
    Domino horizontal;  // position of the next largest
};
SConfiguration s_configuration(Kind kind, bool prime, int n, bool transposed);
DominoTableau canonical_filling(Kind kind, bool prime, int n, bool transposed);  // T~_n family member

// Operators of the requested kinds that can act at the given rank.
enum FamilyFlags : unsigned { kFamilyT = 1, kFamilyU = 2, kFamilyS = 4, kFamilyEnlarged = 8 };
std::vector<OperatorId> operators_for_rank(Kind kind, int rank, unsigned families);

}  // namespace domino
