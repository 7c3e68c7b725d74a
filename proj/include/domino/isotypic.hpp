#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "domino/correspondence.hpp"
#include "domino/cycles.hpp"
#include "domino/kl.hpp"
#include "domino/operators.hpp"
#include "domino/reps.hpp"

namespace domino {

// Everything the isotypic checks need about one rank and tableau kind.  Left
// cells are the classes of the recording tableau T_R(w); the operators act on
// the left-cell tableau, so at this layer an element w is represented by the
// pair (T_R(w), T_L(w)).
class CellStructure {
public:
    CellStructure(const KLTable& kl, Kind kind);

    const KLTable& kl() const { return *kl_; }
    Kind kind() const { return kind_; }
    int rank() const { return kl_->rank(); }
    const CellPartition& cells() const { return cells_; }

    const TableauPair& pair(int w) const { return pairs_[static_cast<std::size_t>(w)]; }  // insert(w)
    TableauPair op_pair(int w) const { return pair(w).swapped(); }
    int element_of_op_pair(const TableauPair& p) const;  // -1 if not a pair of this rank

    const CellModule& module(int left_cell) const { return modules_[static_cast<std::size_t>(left_cell)]; }
    const ClassFunction& character(int left_cell) const { return characters_[static_cast<std::size_t>(left_cell)]; }

private:
    const KLTable* kl_;
    Kind kind_;
    CellPartition cells_;
    std::vector<TableauPair> pairs_;
    std::map<TableauPair, int> by_pair_;
    std::vector<CellModule> modules_;
    std::vector<ClassFunction> characters_;
};

// Left cells predicted from tableaux alone: classes of T_R under moving through
// non-core open cycles.  Returns a class id per element (numbered by least element).
std::vector<int> predicted_left_cells(const CellStructure& cs);

struct CellIntersection {
    int left_cell = -1;
    int right_cell = -1;
    std::vector<int> elements;  // ascending
    int special = -1;           // the element whose tableaux have special shape
};

// All nonempty intersections of a left and a right cell, ordered by (left, right).
std::vector<CellIntersection> intersections(const CellStructure& cs);
// Throws on empty intersections or when the special element is not unique.
CellIntersection intersection(const CellStructure& cs, int left_cell, int right_cell);

struct CycleParametrization {
    std::vector<ExtendedOpenCycle> cycles;  // of the special element's pair
    std::vector<int> element_of;            // subset mask -> element (-1 if the move leaves the rank)
    std::vector<Shape> shape_of;            // subset mask -> common shape after the move
    bool bijective = false;                 // masks hit every element of the intersection once
    bool inside = false;                    // every image lies in the intersection
};
CycleParametrization cycle_parametrization(const CellStructure& cs, const CellIntersection& i);

struct IsotypicVector {
    Shape sigma;
    unsigned e_mask = 0;                             // the extended cycles moving x to shape sigma
    std::vector<std::pair<int, int>> coefficients;  // (element, +-1), ascending elements
    QVector in_module(const CellModule& m) const;
    nlohmann::json to_json(const CellStructure& cs) const;
};
// sigma_w = (-1)^{|f(w) & e(sigma)|}.  Throws if sigma is unreachable or ambiguous.
IsotypicVector r_sigma(const CellStructure& cs, const CellIntersection& i, const Shape& sigma);
std::vector<IsotypicVector> all_r_sigma(const CellStructure& cs, const CellIntersection& i);

struct IsotypicReport {
    int n = 0;
    Kind kind = Kind::C;
    int intersections = 0;
    int vectors = 0;
    std::vector<std::string> findings;  // empty on success
    bool pass() const { return findings.empty(); }
    nlohmann::json to_json() const;
};
IsotypicReport verify_isotypic(const CellStructure& cs, int threads = 1);

// Images of one element under one operator at the group layer.  T_{ab}, S and the
// enlarged operators act through op_pair; U^L is extended linearly by the full
// wall-crossing T^L on the coset w<s1,s2> (its same-shape part is U^L).
std::vector<int> operator_images(const CellStructure& cs, const OperatorId& op, int w);
std::vector<int> group_wall_crossing(const CellStructure& cs, bool forward, int w);

// b_w -> sum of b_y over images y in c2 (rows: c2 basis, columns: c1 basis).
IntMatrix operator_linear_map(const CellStructure& cs, const OperatorSequence& seq, int c1, int c2);
bool is_equivariant(const CellStructure& cs, const IntMatrix& phi, int c1, int c2);

struct TransferReport {
    int n = 0;
    Kind kind = Kind::C;
    int step_maps = 0;
    int transfers = 0;
    std::vector<std::string> findings;
    bool pass() const { return findings.empty(); }
    nlohmann::json to_json() const;
};
// Every operator step between left cells is W-equivariant, and for every R_sigma
// of C1 cap R some operator path carries it to a nonzero multiple of R_sigma of
// C2 cap R, for each C2 in the two-sided cell that contains pi and meets R.
TransferReport verify_transfer(const CellStructure& cs);

// The rank-6 type C intersection of the (5,3,3,1) quasi-staircase cell, from tableaux alone.
struct C6Report {
    std::vector<Shape> shapes;                  // shapes of the intersection elements
    std::map<std::string, std::vector<int>> signs;  // sigma -> signs in the order of `shapes`
    std::vector<std::string> findings;
    bool pass() const { return findings.empty(); }
    nlohmann::json to_json() const;
};
C6Report c6_combinatorial_check();

}  // namespace domino
