#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "domino/operators.hpp"

namespace domino {

// The transitive generating set: same-length T, different-length U^L and the S-family.
inline constexpr unsigned kTransitiveFamily = kFamilyT | kFamilyU | kFamilyS;

// BFS closure under every applicable operator of the chosen families; sorted.
std::vector<TableauPair> orbit(const TableauPair& pair, unsigned families = kTransitiveFamily,
                               const OperatorOptions& opt = {});

struct TransitivityOptions {
    OperatorOptions operators;
    int threads = 1;
    // T, U^L and S never read the right tableau, so the left-tableau graph can be
    // built once and reused for every right tableau.  Ignored for enlarged families.
    bool shared_left_graph = false;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct RightTableauResult {
    DominoTableau right;
    std::vector<int> orbit_sizes;  // strongly connected components of the step graph, descending
    bool pass() const { return orbit_sizes.size() == 1; }
};

struct TransitivityReport {
    Shape shape;
    Kind kind = Kind::C;
    int tableaux = 0;
    std::vector<RightTableauResult> per_right;
    bool shared_left_graph = false;
    bool timed_out = false;
    int max_orbits() const;
    bool pass() const;
    nlohmann::json to_json(bool with_per_right = true) const;
};

// For every right tableau T2 of the shape, the graph on {(T1, T2)} whose edges are
// right-tableau-preserving operator steps must be strongly connected.
TransitivityReport check_transitivity(const Shape& shape, Kind kind, unsigned families = kTransitiveFamily,
                                      const TransitivityOptions& opt = {});

struct CampaignReport {
    Kind kind = Kind::C;
    unsigned families = kTransitiveFamily;
    std::vector<TransitivityReport> shapes;
    bool timed_out = false;
    bool pass() const;
    nlohmann::json to_json() const;
};

// All tilable shapes of rank 1..max_rank (or the given shapes).
CampaignReport check_campaign(Kind kind, int max_rank, unsigned families = kTransitiveFamily,
                              const TransitivityOptions& opt = {});
CampaignReport check_campaign(Kind kind, const std::vector<Shape>& shapes, unsigned families = kTransitiveFamily,
                              const TransitivityOptions& opt = {});

std::string family_names(unsigned families);  // "T,U,S"

}  // namespace domino
