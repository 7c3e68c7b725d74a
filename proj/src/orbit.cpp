#include "domino/orbit.hpp"

#include "domino/graph.hpp"
#include "domino/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace domino {

std::vector<TableauPair> orbit(const TableauPair& pair, unsigned families, const OperatorOptions& opt) {
    const auto ops = operators_for_rank(pair.left.kind(), pair.left.rank(), families);
    std::set<TableauPair> seen{pair};
    std::deque<TableauPair> queue{pair};
    while (!queue.empty()) {
        auto p = std::move(queue.front());
        queue.pop_front();
        for (const auto& op : ops)
            for (auto& q : apply(op, p, opt))
                if (seen.insert(q).second) queue.push_back(std::move(q));
    }
    return {seen.begin(), seen.end()};
}

namespace {

using Graph = Digraph;

std::vector<int> scc_sizes(const Graph& g) {
    int count = 0;
    auto comp = strongly_connected_components(g, &count);
    std::vector<int> sizes(count, 0);
    for (int c : comp) ++sizes[c];
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

Graph step_graph(const std::vector<DominoTableau>& lefts, const DominoTableau& right,
                 const std::vector<OperatorId>& ops, const OperatorOptions& opt) {
    Graph g(lefts.size());
    for (std::size_t i = 0; i < lefts.size(); ++i) {
        TableauPair p{lefts[i], right};
        for (const auto& op : ops)
            for (auto& q : apply(op, p, opt)) {
                if (!(q.right == right)) continue;  // only right-tableau-preserving steps
                auto it = std::lower_bound(lefts.begin(), lefts.end(), q.left);
                if (it == lefts.end() || !(*it == q.left)) throw std::logic_error("operator left the shape");
                g[i].push_back(static_cast<int>(it - lefts.begin()));
            }
        std::sort(g[i].begin(), g[i].end());
        g[i].erase(std::unique(g[i].begin(), g[i].end()), g[i].end());
    }
    return g;
}

bool expired(const TransitivityOptions& opt) {
    return opt.deadline && std::chrono::steady_clock::now() > *opt.deadline;
}

}  // namespace

int TransitivityReport::max_orbits() const {
    int m = 0;
    for (auto& r : per_right) m = std::max(m, static_cast<int>(r.orbit_sizes.size()));
    return m;
}

bool TransitivityReport::pass() const {
    if (timed_out) return false;
    return std::all_of(per_right.begin(), per_right.end(), [](auto& r) { return r.pass(); });
}

nlohmann::json TransitivityReport::to_json(bool with_per_right) const {
    nlohmann::json j;
    j["shape"] = shape.str();
    j["kind"] = std::string(1, kind_char(kind));
    j["tableaux"] = tableaux;
    j["right_tableaux"] = per_right.size();
    j["max_orbits"] = max_orbits();
    j["shared_left_graph"] = shared_left_graph;
    j["timed_out"] = timed_out;
    j["pass"] = pass();
    if (with_per_right) {
        auto& arr = j["per_right"] = nlohmann::json::array();
        for (auto& r : per_right) arr.push_back({{"right", r.right.to_json()}, {"orbit_sizes", r.orbit_sizes}});
    } else {
        // failing right tableaux are always listed
        auto& arr = j["failing_right"] = nlohmann::json::array();
        for (auto& r : per_right)
            if (!r.pass()) arr.push_back({{"right", r.right.to_json()}, {"orbit_sizes", r.orbit_sizes}});
    }
    return j;
}

TransitivityReport check_transitivity(const Shape& shape, Kind kind, unsigned families,
                                      const TransitivityOptions& opt) {
    if (!is_tilable(shape, kind)) throw std::invalid_argument("shape " + shape.str() + " is not tilable");
    TransitivityReport rep;
    rep.shape = shape;
    rep.kind = kind;
    const auto tabs = enumerate_tableaux(shape, kind);
    rep.tableaux = static_cast<int>(tabs.size());
    const int rank = tabs.front().rank();
    const auto ops = operators_for_rank(kind, rank, families);
    rep.per_right.resize(tabs.size());
    for (std::size_t i = 0; i < tabs.size(); ++i) rep.per_right[i].right = tabs[i];

    rep.shared_left_graph = opt.shared_left_graph && !(families & kFamilyEnlarged);
    if (rep.shared_left_graph) {
        auto sizes = scc_sizes(step_graph(tabs, tabs.front(), ops, opt.operators));
        for (auto& r : rep.per_right) r.orbit_sizes = sizes;
        return rep;
    }
    std::atomic<bool> timed_out{false};
    parallel_for(static_cast<int>(tabs.size()), opt.threads, [&](int i) {
        if (timed_out || expired(opt)) {
            timed_out = true;
            return;
        }
        rep.per_right[i].orbit_sizes = scc_sizes(step_graph(tabs, tabs[i], ops, opt.operators));
    });
    rep.timed_out = timed_out;
    return rep;
}

bool CampaignReport::pass() const {
    if (timed_out) return false;
    return std::all_of(shapes.begin(), shapes.end(), [](auto& s) { return s.pass(); });
}

std::string family_names(unsigned families) {
    std::string s;
    auto add = [&](unsigned f, const char* name) {
        if (!(families & f)) return;
        if (!s.empty()) s += ',';
        s += name;
    };
    add(kFamilyT, "T");
    add(kFamilyU, "U");
    add(kFamilyS, "S");
    add(kFamilyEnlarged, "EnlT");
    return s;
}

nlohmann::json CampaignReport::to_json() const {
    nlohmann::json j;
    j["kind"] = std::string(1, kind_char(kind));
    j["families"] = family_names(families);
    j["timed_out"] = timed_out;
    j["pass"] = pass();
    auto& arr = j["shapes"] = nlohmann::json::array();
    for (auto& s : shapes) arr.push_back(s.to_json(false));
    return j;
}

CampaignReport check_campaign(Kind kind, const std::vector<Shape>& shapes, unsigned families,
                              const TransitivityOptions& opt) {
    CampaignReport rep;
    rep.kind = kind;
    rep.families = families;
    for (const auto& s : shapes) {
        if (expired(opt)) {
            rep.timed_out = true;
            break;
        }
        rep.shapes.push_back(check_transitivity(s, kind, families, opt));
        if (rep.shapes.back().timed_out) rep.timed_out = true;
    }
    return rep;
}

CampaignReport check_campaign(Kind kind, int max_rank, unsigned families, const TransitivityOptions& opt) {
    std::vector<Shape> shapes;
    for (int r = 1; r <= max_rank; ++r)
        for (auto& s : tilable_shapes(r, kind)) shapes.push_back(s);
    return check_campaign(kind, shapes, families, opt);
}

}  // namespace domino
