#include "domino/isotypic.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "domino/parallel.hpp"

namespace domino {

CellStructure::CellStructure(const KLTable& kl, Kind kind) : kl_(&kl), kind_(kind), cells_(compute_cells(kl)) {
    for (int w = 0; w < kl.size(); ++w) {
        pairs_.push_back(insert(kl.element(w), kind));
        by_pair_.emplace(pairs_.back(), w);
    }
    for (auto& c : cells_.left) {
        modules_.push_back(cell_module(kl, c));
        characters_.push_back(module_character(modules_.back()));
    }
}

int CellStructure::element_of_op_pair(const TableauPair& p) const {
    auto it = by_pair_.find(p.swapped());
    return it == by_pair_.end() ? -1 : it->second;
}

std::vector<int> predicted_left_cells(const CellStructure& cs) {
    const int N = cs.kl().size();
    std::map<DominoTableau, int> id;
    std::vector<DominoTableau> rights;
    for (int w = 0; w < N; ++w)
        if (id.emplace(cs.pair(w).right, static_cast<int>(rights.size())).second) rights.push_back(cs.pair(w).right);
    std::vector<int> parent(rights.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < rights.size(); ++i)
        for (auto& c : open_cycles(rights[i])) {
            auto it = id.find(move_through(rights[i], c));
            if (it != id.end()) parent[find(static_cast<int>(i))] = find(it->second);
        }
    std::vector<int> out(N), number(rights.size(), -1);
    int next = 0;
    for (int w = 0; w < N; ++w) {
        int r = find(id[cs.pair(w).right]);
        if (number[r] < 0) number[r] = next++;
        out[w] = number[r];
    }
    return out;
}

// ---------------------------------------------------------- intersections

namespace {

int special_element(const CellStructure& cs, const std::vector<int>& elements) {
    int found = -1, count = 0;
    for (int w : elements)
        if (is_special(cs.pair(w).left.shape(), cs.kind())) {
            found = w;
            ++count;
        }
    return count == 1 ? found : -1;
}

}  // namespace

std::vector<CellIntersection> intersections(const CellStructure& cs) {
    std::map<std::pair<int, int>, std::vector<int>> groups;
    const auto& cp = cs.cells();
    for (int w = 0; w < cs.kl().size(); ++w) groups[{cp.left_of[w], cp.right_of[w]}].push_back(w);
    std::vector<CellIntersection> out;
    for (auto& [key, elems] : groups) {
        CellIntersection i{key.first, key.second, elems, special_element(cs, elems)};
        out.push_back(std::move(i));
    }
    return out;
}

CellIntersection intersection(const CellStructure& cs, int left_cell, int right_cell) {
    const auto& cp = cs.cells();
    if (left_cell < 0 || left_cell >= static_cast<int>(cp.left.size()) || right_cell < 0 ||
        right_cell >= static_cast<int>(cp.right.size()))
        throw std::out_of_range("cell index");
    CellIntersection i{left_cell, right_cell, {}, -1};
    for (int w : cp.left[left_cell].elements)
        if (cp.right_of[w] == right_cell) i.elements.push_back(w);
    if (i.elements.empty()) throw std::invalid_argument("empty cell intersection");
    i.special = special_element(cs, i.elements);
    if (i.special < 0) throw std::logic_error("cell intersection without a unique special element");
    return i;
}

CycleParametrization cycle_parametrization(const CellStructure& cs, const CellIntersection& i) {
    if (i.special < 0) throw std::invalid_argument("intersection has no special element");
    CycleParametrization cp;
    const auto p = cs.op_pair(i.special);
    cp.cycles = extended_open_cycles(p);
    const int r = static_cast<int>(cp.cycles.size());
    std::set<int> hit;
    cp.inside = true;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<ExtendedOpenCycle> sub;
        for (int k = 0; k < r; ++k)
            if (mask >> k & 1) sub.push_back(cp.cycles[k]);
        auto q = move_pair_through(p, sub);
        cp.shape_of.push_back(q.left.shape());
        int y = cs.element_of_op_pair(q);
        cp.element_of.push_back(y);
        if (!std::binary_search(i.elements.begin(), i.elements.end(), y)) cp.inside = false;
        hit.insert(y);
    }
    cp.bijective = cp.inside && hit.size() == (1u << r) && hit.size() == i.elements.size();
    return cp;
}

QVector IsotypicVector::in_module(const CellModule& m) const {
    QVector v(m.dim());
    for (auto [w, s] : coefficients) {
        int pos = m.position(w);
        if (pos < 0) throw std::invalid_argument("R_sigma support outside the cell");
        v[pos] = s;
    }
    return v;
}

nlohmann::json IsotypicVector::to_json(const CellStructure& cs) const {
    nlohmann::json j;
    j["sigma"] = sigma.str();
    auto& terms = j["terms"] = nlohmann::json::array();
    for (auto [w, s] : coefficients)
        terms.push_back({{"element", cs.kl().element(w).str()},
                         {"word", reduced_word(cs.kl().element(w))},
                         {"shape", cs.pair(w).left.shape().str()},
                         {"sign", s}});
    return j;
}

namespace {

IsotypicVector build_r_sigma(const CycleParametrization& cp, unsigned e, const Shape& sigma) {
    IsotypicVector v;
    v.sigma = sigma;
    v.e_mask = e;
    for (unsigned f = 0; f < cp.element_of.size(); ++f)
        v.coefficients.push_back({cp.element_of[f], std::popcount(f & e) % 2 ? -1 : 1});
    std::sort(v.coefficients.begin(), v.coefficients.end());
    return v;
}

}  // namespace

IsotypicVector r_sigma(const CellStructure& cs, const CellIntersection& i, const Shape& sigma) {
    auto cp = cycle_parametrization(cs, i);
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < cp.shape_of.size(); ++m)
        if (cp.shape_of[m] == sigma) masks.push_back(m);
    if (masks.empty()) throw std::invalid_argument("shape " + sigma.str() + " is not reachable from the special element");
    if (masks.size() > 1) throw std::logic_error("shape " + sigma.str() + " is reached by several cycle sets");
    return build_r_sigma(cp, masks[0], sigma);
}

std::vector<IsotypicVector> all_r_sigma(const CellStructure& cs, const CellIntersection& i) {
    auto cp = cycle_parametrization(cs, i);
    std::vector<IsotypicVector> out;
    for (unsigned m = 0; m < cp.shape_of.size(); ++m) out.push_back(build_r_sigma(cp, m, cp.shape_of[m]));
    return out;
}

// ------------------------------------------------------ R_sigma checks

namespace {

std::string cell_pair_str(const CellIntersection& i) {
    return "left cell " + std::to_string(i.left_cell) + " / right cell " + std::to_string(i.right_cell);
}

std::vector<std::string> check_intersection(const CellStructure& cs, const CellIntersection& i, int& vectors) {
    std::vector<std::string> f;
    auto fail = [&](const std::string& msg) { f.push_back(cell_pair_str(i) + ": " + msg); };
    if (i.special < 0) {
        fail("no unique special element");
        return f;
    }
    auto cp = cycle_parametrization(cs, i);
    if (!cp.inside) fail("moving through extended open cycles leaves the intersection");
    if (!cp.bijective) {
        fail("cycle subsets do not parametrize the intersection (" + std::to_string(cp.element_of.size()) + " subsets, " +
             std::to_string(i.elements.size()) + " elements)");
        return f;
    }
    if (std::set<Shape>(cp.shape_of.begin(), cp.shape_of.end()).size() != cp.shape_of.size())
        fail("two cycle subsets reach the same shape");

    const auto& cells = cs.cells();
    const auto& m = cs.module(i.left_cell);
    const int n = cs.rank();
    // right cell R is the inverse of the left cell containing the inverse of its elements
    const int r_as_left = cells.left_of[cs.kl().inverse_index(i.elements.front())];
    std::set<Bipartition> cons_c, cons_r, common;
    for (auto& [bp, mult] : decompose(cs.character(i.left_cell), n)) cons_c.insert(bp);
    for (auto& [bp, mult] : decompose(cs.character(r_as_left), n)) cons_r.insert(bp);
    std::set_intersection(cons_c.begin(), cons_c.end(), cons_r.begin(), cons_r.end(),
                          std::inserter(common, common.begin()));
    if (common.size() != i.elements.size())
        fail("|C cap R| = " + std::to_string(i.elements.size()) + " but " + std::to_string(common.size()) +
             " common constituents");

    auto vecs = all_r_sigma(cs, i);
    std::vector<ClassFunction> chis;
    Subspace total(m.dim());
    int dims = 0;
    const int size = static_cast<int>(vecs.size());
    for (auto& v : vecs) {
        ++vectors;
        auto sub = generated_submodule(m, {v.in_module(m)});
        auto chi = module_character(m, sub);
        chis.push_back(chi);
        dims += sub.dim();
        for (auto& b : sub.basis()) total.add(b);
        if (inner_product(n, chi, chi) != 1) {
            fail("R_" + v.sigma.str() + " generates a reducible module");
            continue;
        }
        auto got = identify(chi, n);
        auto want = two_core_quotient(v.sigma).quotient;
        if (!(got == want)) fail("R_" + v.sigma.str() + " affords " + got.str() + ", expected " + want.str());
        int plus = 0;
        for (auto [w, s] : v.coefficients) plus += s > 0;
        if (is_special(v.sigma, cs.kind())) {
            if (plus != size) fail("special R_" + v.sigma.str() + " has a -1 coefficient");
        } else if (2 * plus != size) {
            fail("R_" + v.sigma.str() + " is not half +1 / half -1");
        }
    }
    for (std::size_t a = 0; a < chis.size(); ++a)
        for (std::size_t b = a + 1; b < chis.size(); ++b)
            if (inner_product(n, chis[a], chis[b]) != 0) fail("submodules of two R_sigma share a constituent");
    if (total.dim() != dims) fail("the R_sigma submodules do not form a direct sum");
    if (r_as_left == i.left_cell && dims != m.dim())
        fail("the R_sigma submodules of C cap C^-1 span " + std::to_string(dims) + " of " + std::to_string(m.dim()));
    // sign matrix: rows indexed by sigma, columns by cycle subsets
    std::vector<std::vector<int>> H;
    auto cpar = cycle_parametrization(cs, i);
    for (auto& v : vecs) {
        std::vector<int> row;
        for (int y : cpar.element_of)
            for (auto [w, s] : v.coefficients)
                if (w == y) row.push_back(s);
        H.push_back(row);
    }
    std::set<std::vector<int>> rows(H.begin(), H.end());
    for (auto& a : H) {
        for (auto& b : H) {
            int dot = 0;
            std::vector<int> prod;
            for (std::size_t k = 0; k < a.size(); ++k) {
                dot += a[k] * b[k];
                prod.push_back(a[k] * b[k]);
            }
            if (dot != (a == b ? size : 0)) fail("sign rows are not orthogonal");
            if (!rows.count(prod)) fail("sign rows are not closed under multiplication");
        }
    }
    return f;
}

}  // namespace

IsotypicReport verify_isotypic(const CellStructure& cs, int threads) {
    IsotypicReport rep;
    rep.n = cs.rank();
    rep.kind = cs.kind();
    auto all = intersections(cs);
    rep.intersections = static_cast<int>(all.size());
    std::vector<std::vector<std::string>> findings(all.size());
    std::vector<int> vecs(all.size(), 0);
    parallel_for(static_cast<int>(all.size()), threads,
                 [&](int k) { findings[k] = check_intersection(cs, all[k], vecs[k]); });
    for (std::size_t k = 0; k < all.size(); ++k) {
        rep.vectors += vecs[k];
        rep.findings.insert(rep.findings.end(), findings[k].begin(), findings[k].end());
    }
    return rep;
}

nlohmann::json IsotypicReport::to_json() const {
    return {{"n", n},
            {"kind", std::string(1, kind_char(kind))},
            {"intersections", intersections},
            {"vectors", vectors},
            {"findings", findings},
            {"pass", pass()}};
}

// ---------------------------------------------------------- operator maps

std::vector<int> group_wall_crossing(const CellStructure& cs, bool forward, int w) {
    const auto& kl = cs.kl();
    if (kl.rank() < 2) return {};
    const unsigned a = forward ? 1u : 2u, b = forward ? 2u : 1u;
    auto has = [&](int x, unsigned s) { return (kl.right_descents(x) >> (s - 1) & 1) != 0; };
    if (!(has(w, b) && !has(w, a))) return {};
    std::set<int> coset{w};
    std::deque<int> queue{w};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int s : {1, 2}) {
            int y = kl.right_mul(x, s);
            if (coset.insert(y).second) queue.push_back(y);
        }
    }
    std::vector<int> out;
    for (int y : coset)
        if (has(y, a) && !has(y, b) && kl.mu_sym(y, w) != 0) out.push_back(y);
    return out;
}

std::vector<int> operator_images(const CellStructure& cs, const OperatorId& op, int w) {
    if (op.type == OperatorId::Type::DiffLengthL) return group_wall_crossing(cs, op.forward, w);
    std::vector<int> out;
    for (auto& q : apply(op, cs.op_pair(w))) {
        int y = cs.element_of_op_pair(q);
        if (y < 0) throw std::logic_error("operator image is not a pair of this rank");
        out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix operator_linear_map(const CellStructure& cs, const OperatorSequence& seq, int c1, int c2) {
    const auto& m1 = cs.module(c1);
    const auto& m2 = cs.module(c2);
    IntMatrix phi(m2.dim(), std::vector<std::int64_t>(m1.dim(), 0));
    for (int col = 0; col < m1.dim(); ++col) {
        std::map<int, std::int64_t> v{{m1.cell.elements[col], 1}};
        for (const auto& op : seq) {
            std::map<int, std::int64_t> next;
            for (auto [w, c] : v)
                for (int y : operator_images(cs, op, w)) next[y] += c;
            v = std::move(next);
        }
        for (auto [y, c] : v)
            if (int row = m2.position(y); row >= 0) phi[row][col] += c;
    }
    return phi;
}

namespace {

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    IntMatrix r(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

bool is_zero(const IntMatrix& m) {
    for (auto& row : m)
        for (auto x : row)
            if (x) return false;
    return true;
}

}  // namespace

bool is_equivariant(const CellStructure& cs, const IntMatrix& phi, int c1, int c2) {
    const auto& m1 = cs.module(c1);
    const auto& m2 = cs.module(c2);
    for (int s = 1; s <= cs.rank(); ++s)
        if (matmul(act(m2, s), phi) != matmul(phi, act(m1, s))) return false;
    return true;
}

nlohmann::json TransferReport::to_json() const {
    return {{"n", n},
            {"kind", std::string(1, kind_char(kind))},
            {"step_maps", step_maps},
            {"transfers", transfers},
            {"findings", findings},
            {"pass", pass()}};
}

namespace {

bool proportional(const QVector& img, const QVector& target) {
    Rational lambda = 0;
    for (std::size_t r = 0; r < target.size(); ++r) {
        if (target[r] == 0) {
            if (img[r] != 0) return false;
        } else if (lambda == 0) {
            lambda = img[r] / target[r];
            if (lambda == 0) return false;
        } else if (img[r] != lambda * target[r]) {
            return false;
        }
    }
    return lambda != 0;
}

QVector apply_map(const IntMatrix& phi, const QVector& v) {
    QVector out(phi.size());
    for (std::size_t r = 0; r < phi.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c)
            if (phi[r][c] && v[c] != 0) out[r] += phi[r][c] * v[c];
    return out;
}

}  // namespace

TransferReport verify_transfer(const CellStructure& cs) {
    TransferReport rep;
    rep.n = cs.rank();
    rep.kind = cs.kind();
    const auto& cells = cs.cells();
    const int nc = static_cast<int>(cells.left.size());
    const auto ops = operators_for_rank(cs.kind(), cs.rank(), kFamilyT | kFamilyU | kFamilyS);
    // step maps between distinct left cells
    std::vector<std::vector<std::pair<int, IntMatrix>>> edges(nc);
    for (int c = 0; c < nc; ++c)
        for (const auto& op : ops) {
            std::set<int> targets;
            int defined = 0;
            for (int w : cells.left[c].elements) {
                auto im = operator_images(cs, op, w);
                defined += !im.empty();
                for (int y : im) targets.insert(cells.left_of[y]);
            }
            if (defined == 0) continue;
            if (defined != static_cast<int>(cells.left[c].elements.size()))
                rep.findings.push_back(op.str() + " is defined on part of left cell " + std::to_string(c));
            for (int t : targets) {
                auto phi = operator_linear_map(cs, {op}, c, t);
                ++rep.step_maps;
                if (!is_equivariant(cs, phi, c, t))
                    rep.findings.push_back(op.str() + ": cell " + std::to_string(c) + " -> " + std::to_string(t) +
                                           " is not W-equivariant");
                if (t != c && !is_zero(phi)) edges[c].emplace_back(t, std::move(phi));
            }
        }
    // For each R_sigma: follow steps that keep its image nonzero.  Every cell of the
    // two-sided cell that contains pi and meets R must be reached, and the image
    // there must be a nonzero multiple of that cell's R_sigma.
    auto inters = intersections(cs);
    std::map<std::pair<int, int>, const CellIntersection*> by_cells;
    for (auto& i : inters) by_cells[{i.left_cell, i.right_cell}] = &i;
    std::vector<std::set<Bipartition>> constituents(nc);
    for (int c = 0; c < nc; ++c)
        for (auto& [bp, mult] : decompose(cs.character(c), cs.rank())) constituents[c].insert(bp);
    for (auto& i1 : inters) {
        if (i1.special < 0) continue;  // reported by verify_isotypic
        const int c1 = i1.left_cell, right = i1.right_cell;
        const int ts = cells.two_sided_of[i1.elements.front()];
        for (auto& v : all_r_sigma(cs, i1)) {
            const auto pi = two_core_quotient(v.sigma).quotient;
            std::map<int, QVector> reached{{c1, v.in_module(cs.module(c1))}};
            std::deque<int> queue{c1};
            while (!queue.empty()) {
                int c = queue.front();
                queue.pop_front();
                for (auto& [t, phi] : edges[c]) {
                    if (reached.count(t)) continue;
                    auto img = apply_map(phi, reached.at(c));
                    if (is_zero(img)) continue;
                    reached.emplace(t, std::move(img));
                    queue.push_back(t);
                }
            }
            const std::string what = "R_" + v.sigma.str() + " of cell " + std::to_string(c1) + " (right cell " +
                                     std::to_string(right) + ")";
            for (int c2 = 0; c2 < nc; ++c2) {
                if (c2 == c1 || cells.two_sided_of[cells.left[c2].elements.front()] != ts) continue;
                auto i2 = by_cells.find({c2, right});
                const bool expected = i2 != by_cells.end() && constituents[c2].count(pi);
                auto it = reached.find(c2);
                if (it == reached.end()) {
                    if (expected) rep.findings.push_back(what + " never reaches cell " + std::to_string(c2));
                    continue;
                }
                ++rep.transfers;
                if (!expected) {
                    rep.findings.push_back(what + " has a nonzero image in cell " + std::to_string(c2) +
                                           ", which lacks " + pi.str() + " or misses the right cell");
                    continue;
                }
                QVector target;
                try {
                    target = r_sigma(cs, *i2->second, v.sigma).in_module(cs.module(c2));
                } catch (const std::exception& e) {
                    rep.findings.push_back(what + " -> cell " + std::to_string(c2) + ": " + e.what());
                    continue;
                }
                if (!proportional(it->second, target))
                    rep.findings.push_back(what + " -> cell " + std::to_string(c2) +
                                           ": image is not a nonzero multiple of the target R_sigma");
            }
        }
    }
    return rep;
}

// ------------------------------------------------------------------ C_6

nlohmann::json C6Report::to_json() const {
    nlohmann::json j;
    auto& sh = j["shapes"] = nlohmann::json::array();
    for (auto& s : shapes) sh.push_back(s.str());
    j["signs"] = signs;
    j["findings"] = findings;
    j["pass"] = pass();
    return j;
}

C6Report c6_combinatorial_check() {
    C6Report rep;
    const Kind kind = Kind::C;
    const auto start = canonical_filling(kind, false, 2, false);
    // the left cell of the quasi-staircase tableau, predicted from open cycles
    std::set<DominoTableau> cls{start};
    std::deque<DominoTableau> queue{start};
    while (!queue.empty()) {
        auto t = queue.front();
        queue.pop_front();
        for (auto& c : open_cycles(t)) {
            auto m = move_through(t, c);
            if (cls.insert(m).second) queue.push_back(m);
        }
    }
    std::map<Shape, std::vector<DominoTableau>> by_shape;
    for (auto& t : cls) by_shape[t.shape()].push_back(t);
    // I = C cap C^-1: pairs of same-shape tableaux from the class
    std::set<TableauPair> elements;
    for (auto& [s, ts] : by_shape)
        for (auto& a : ts)
            for (auto& b : ts) elements.insert({a, b});
    for (auto& [s, ts] : by_shape)
        if (ts.size() != 1) rep.findings.push_back("shape " + s.str() + " occurs " + std::to_string(ts.size()) + " times");
    const std::vector<Shape> want = {Shape({4, 4, 2, 2}), Shape({4, 3, 3, 2}), Shape({5, 3, 3, 1}), Shape({5, 4, 2, 1})};
    if (elements.size() != 4) rep.findings.push_back("|I| = " + std::to_string(elements.size()) + ", expected 4");
    std::vector<Shape> specials;
    for (auto& [s, ts] : by_shape)
        if (is_special(s, kind)) specials.push_back(s);
    if (specials.size() != 1) {
        rep.findings.push_back("expected exactly one special shape in the cell");
        return rep;
    }
    const TableauPair x{by_shape[specials[0]].front(), by_shape[specials[0]].front()};
    auto cycles = extended_open_cycles(x);
    const int r = static_cast<int>(cycles.size());
    std::vector<Shape> shape_of;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<ExtendedOpenCycle> sub;
        for (int k = 0; k < r; ++k)
            if (mask >> k & 1) sub.push_back(cycles[k]);
        auto q = move_pair_through(x, sub);
        if (!elements.count(q)) rep.findings.push_back("a cycle move leaves the intersection");
        shape_of.push_back(q.left.shape());
    }
    if (std::set<Shape>(shape_of.begin(), shape_of.end()) != std::set<Shape>(want.begin(), want.end()))
        rep.findings.push_back("the cycle subsets do not reach the four expected shapes");
    rep.shapes = want;
    for (unsigned e = 0; e < shape_of.size(); ++e) {
        std::vector<int> row(want.size(), 0);
        for (unsigned f = 0; f < shape_of.size(); ++f) {
            auto pos = std::find(want.begin(), want.end(), shape_of[f]) - want.begin();
            if (pos < static_cast<long>(want.size())) row[pos] = std::popcount(e & f) % 2 ? -1 : 1;
        }
        rep.signs[shape_of[e].str()] = row;
    }
    // expected R_sigma, in the order (4,4,2,2), (4,3,3,2), (5,3,3,1), (5,4,2,1)
    const std::map<std::string, std::vector<int>> expected = {
        {Shape({4, 4, 2, 2}).str(), {1, 1, 1, 1}},
        {Shape({4, 3, 3, 2}).str(), {1, -1, -1, 1}},
        {Shape({5, 3, 3, 1}).str(), {1, -1, 1, -1}},
        {Shape({5, 4, 2, 1}).str(), {1, 1, -1, -1}},
    };
    for (auto& [s, row] : expected) {
        auto it = rep.signs.find(s);
        if (it == rep.signs.end() || it->second != row) rep.findings.push_back("R_" + s + " differs from the expected signs");
    }
    return rep;
}

}  // namespace domino
