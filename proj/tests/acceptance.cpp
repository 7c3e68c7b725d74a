// One PASS/FAIL line per acceptance criterion.  --extended adds the flagged
// campaigns (rank 7-9 orbits, rank-4 KL, rank-6 KL attempt).
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "domino/correspondence.hpp"
#include "domino/isotypic.hpp"
#include "domino/kl.hpp"
#include "domino/orbit.hpp"
#include "domino/reps.hpp"

using namespace domino;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Check = std::function<Outcome()>;

KLOptions no_cache() {
    KLOptions o;
    o.use_cache = false;
    return o;
}

Outcome rs_bijectivity() {
    std::ostringstream d;
    for (auto kind : {Kind::C, Kind::B})
        for (int n = 1; n <= 4; ++n) {
            std::int64_t pairs = 0, order = 1 << n;
            for (int k = 2; k <= n; ++k) order *= k;
            for (auto& s : tilable_shapes(n, kind)) {
                auto c = static_cast<std::int64_t>(enumerate_tableaux(s, kind).size());
                pairs += c * c;
            }
            if (pairs != order) return {false, "same-shape pair count differs from |W| at rank " + std::to_string(n)};
            std::set<TableauPair> images;
            for (auto& w : enumerate_group(n)) {
                auto p = insert(w, kind);
                if (!p.valid()) return {false, "invalid pair for " + w.str()};
                if (!(extract(p) == w)) return {false, "extract(insert(w)) != w for " + w.str()};
                if (!(insert(inverse(w), kind) == p.swapped())) return {false, "inverse does not swap for " + w.str()};
                images.insert(p);
            }
            if (static_cast<std::int64_t>(images.size()) != order) return {false, "insert is not injective"};
        }
    return {true, "ranks 1-4, kinds B and C"};
}

Outcome tableau_counts() {
    int shapes = 0;
    for (auto [kind, max_rank] : {std::pair{Kind::C, 7}, std::pair{Kind::B, 6}})
        for (int n = 1; n <= max_rank; ++n)
            for (auto& s : tilable_shapes(n, kind)) {
                ++shapes;
                auto got = static_cast<std::int64_t>(enumerate_tableaux(s, kind).size());
                if (got != count_standard_bitableaux(two_core_quotient(s).quotient))
                    return {false, "count mismatch on " + s.str()};
            }
    return {true, std::to_string(shapes) + " shapes (C total <= 14, B total <= 13)"};
}

Outcome transitivity(bool extended) {
    std::ostringstream d;
    for (auto kind : {Kind::C, Kind::B}) {
        auto rep = check_campaign(kind, 6);
        if (!rep.pass()) return {false, std::string("kind ") + kind_char(kind) + " ranks 1-6 has several orbits"};
        d << kind_char(kind) << ": " << rep.shapes.size() << " shapes; ";
    }
    if (extended) {
        TransitivityOptions opt;
        opt.shared_left_graph = true;
        for (auto [kind, max_rank] : {std::pair{Kind::C, 9}, std::pair{Kind::B, 8}}) {
            auto rep = check_campaign(kind, max_rank, kTransitiveFamily, opt);
            if (!rep.pass()) return {false, std::string("extended campaign fails for kind ") + kind_char(kind)};
            d << kind_char(kind) << " to rank " << max_rank << ": " << rep.shapes.size() << " shapes; ";
        }
    } else {
        d << "extended campaign not requested";
    }
    return {true, d.str()};
}

Outcome s_necessity() {
    std::ostringstream d;
    for (auto [kind, parts] : {std::pair{Kind::C, std::vector<int>{5, 3, 3, 1}}, std::pair{Kind::B, std::vector<int>{5, 4, 2, 2}}}) {
        Shape s(parts);
        auto without = check_transitivity(s, kind, kFamilyT | kFamilyU);
        auto with = check_transitivity(s, kind, kTransitiveFamily);
        if (without.max_orbits() < 2) return {false, "T and U^L alone are transitive on " + s.str()};
        if (!with.pass()) return {false, "full family is not transitive on " + s.str()};
        d << kind_char(kind) << " " << s.str() << ": " << without.max_orbits() << " orbits without S; ";
    }
    return {true, d.str()};
}

Outcome kl_certification(bool extended) {
    KLTable two(2, no_cache());
    for (int x = 0; x < two.size(); ++x)
        for (int w = 0; w < two.size(); ++w)
            if (two.leq(x, w) && two.P(x, w) != KLPolynomial{1}) return {false, "a rank-2 polynomial is not 1"};
    for (int n = 1; n <= (extended ? 4 : 3); ++n) {
        KLTable t(n, no_cache());
        if (auto f = inversion_identity_failures(t); f != 0)
            return {false, std::to_string(f) + " inversion failures at rank " + std::to_string(n)};
    }
    return {true, extended ? "ranks 1-4" : "ranks 1-3 (rank 4 with --extended)"};
}

Outcome cell_sanity() {
    for (int n = 1; n <= 3; ++n) {
        KLTable t(n, no_cache());
        for (auto kind : {Kind::C, Kind::B}) {
            CellStructure cs(t, kind);
            const auto& cells = cs.cells();
            std::vector<int> seen(t.size(), 0);
            for (auto& c : cells.left)
                for (int w : c.elements) ++seen[w];
            if (std::count(seen.begin(), seen.end(), 1) != t.size()) return {false, "left cells do not partition W"};
            for (std::size_t c = 0; c < cells.left.size(); ++c)
                for (auto& [bp, m] : decompose(cs.character(static_cast<int>(c)), n))
                    if (m != 1) return {false, "a left cell module has multiplicities"};
            auto pred = predicted_left_cells(cs);
            for (int x = 0; x < t.size(); ++x)
                for (int y = 0; y < t.size(); ++y)
                    if ((pred[x] == pred[y]) != (cells.left_of[x] == cells.left_of[y]))
                        return {false, "tableau prediction differs at rank " + std::to_string(n)};
        }
    }
    return {true, "ranks 1-3, both kinds"};
}

Outcome isotypic_generators() {
    std::ostringstream d;
    for (int n = 1; n <= 3; ++n) {
        KLTable t(n, no_cache());
        for (auto kind : {Kind::C, Kind::B}) {
            auto rep = verify_isotypic(CellStructure(t, kind));
            if (!rep.pass()) return {false, rep.findings.front()};
            if (n == 3) d << kind_char(kind) << ": " << rep.intersections << " intersections; ";
        }
    }
    return {true, d.str()};
}

Outcome character_engine() {
    for (int n = 1; n <= 4; ++n) {
        const auto& ct = character_table(n);
        const int r = static_cast<int>(ct.irreducibles.size());
        std::int64_t order = 0, sumsq = 0;
        for (auto& c : ct.classes) order += c.size;
        for (int a = 0; a < r; ++a) {
            for (int b = 0; b < r; ++b)
                if (inner_product(n, ct.values[a], ct.values[b]) != (a == b ? 1 : 0))
                    return {false, "row orthogonality fails at rank " + std::to_string(n)};
            for (std::size_t k = 0; k < ct.classes.size(); ++k)
                if (ct.classes[k].representative.is_identity()) sumsq += ct.values[a][k] * ct.values[a][k];
        }
        if (sumsq != order) return {false, "sum of squared degrees != |W|"};
        for (std::size_t k = 0; k < ct.classes.size(); ++k)
            for (std::size_t l = 0; l < ct.classes.size(); ++l) {
                std::int64_t s = 0;
                for (int a = 0; a < r; ++a) s += ct.values[a][k] * ct.values[a][l];
                std::int64_t want = k == l ? order / ct.classes[k].size : 0;
                if (s != want) return {false, "column orthogonality fails at rank " + std::to_string(n)};
            }
    }
    // rank-2 oracle: the four linear characters from generator signs on reduced
    // words; the remaining irreducible is (regular - sum of linear) / 2.  The left
    // cell modules must also add up to the regular character.
    auto classes = conjugacy_classes(2);
    std::vector<std::int64_t> regular;
    for (auto& cl : classes) regular.push_back(cl.representative.is_identity() ? 8 : 0);
    std::set<ClassFunction> oracle;
    ClassFunction rest = regular;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            ClassFunction chi;
            for (auto& cl : classes) {
                std::int64_t v = 1;
                for (int s : reduced_word(cl.representative)) v *= s == 1 ? e1 : e2;
                chi.push_back(v);
            }
            for (std::size_t k = 0; k < chi.size(); ++k) rest[k] -= chi[k];
            oracle.insert(chi);
        }
    for (auto& x : rest) x /= 2;
    oracle.insert(rest);
    const auto& ct = character_table(2);
    if (std::set<ClassFunction>(ct.values.begin(), ct.values.end()) != oracle)
        return {false, "rank-2 table differs from the regular-representation oracle"};
    KLTable t(2, no_cache());
    std::vector<std::int64_t> sum(classes.size(), 0);
    for (auto& c : compute_cells(t).left) {
        auto m = cell_module(t, c);
        for (std::size_t k = 0; k < classes.size(); ++k) {
            auto e = element_matrix(m, classes[k].representative);
            for (int i = 0; i < m.dim(); ++i) sum[k] += e[i][i];
        }
    }
    if (sum != regular) return {false, "left cell modules do not add up to the regular representation"};
    return {true, "ranks 1-4; rank 2 matched against the regular representation"};
}

Outcome transfer() {
    int transfers = 0;
    for (int n = 1; n <= 3; ++n) {
        KLTable t(n, no_cache());
        for (auto kind : {Kind::C, Kind::B}) {
            auto rep = verify_transfer(CellStructure(t, kind));
            if (!rep.pass()) return {false, rep.findings.front()};
            transfers += rep.transfers;
        }
    }
    return {true, std::to_string(transfers) + " composed transfers, ranks 1-3"};
}

Outcome c6(bool extended) {
    auto rep = c6_combinatorial_check();
    if (!rep.pass()) return {false, rep.findings.front()};
    std::string d = "4 elements, signs match;";
    if (!extended) return {true, d + " KL part not requested"};
    KLOptions o = no_cache();
    o.allow_large = true;
    o.max_rank = 6;
    try {
        KLTable t(6, o);
        auto r = verify_isotypic(CellStructure(t, Kind::C));
        return {r.pass(), d + (r.pass() ? " rank-6 KL check passes" : " rank-6 KL check: " + r.findings.front())};
    } catch (const std::length_error& e) {
        return {true, d + " rank-6 KL not run: " + e.what()};
    }
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0)
            extended = true;
        else {
            std::cerr << "usage: acceptance [--extended]\n";
            return 2;
        }
    }
    const std::vector<std::pair<std::string, Check>> checks = {
        {"RS bijectivity", rs_bijectivity},
        {"tableau count identity", tableau_counts},
        {"operator transitivity", [&] { return transitivity(extended); }},
        {"S-family necessity", s_necessity},
        {"KL self-certification", [&] { return kl_certification(extended); }},
        {"cell sanity", cell_sanity},
        {"isotypic generators R_sigma", isotypic_generators},
        {"character engine", character_engine},
        {"equivariance and transfer", transfer},
        {"rank-6 quasi-staircase example [stretch]", [&] { return c6(extended); }},
    };
    bool all = true;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = checks[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all &= o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << checks[k].first << " — "
                  << o.detail << " (" << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
    }
    return all ? 0 : 1;
}
