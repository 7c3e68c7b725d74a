#include "domino/operators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace domino {

std::vector<int> tau(const DominoTableau& t) {
    std::vector<int> out;
    for (int i = 1; i <= t.rank(); ++i)
        if (in_tau(t, i)) out.push_back(i);
    return out;
}

bool in_tau(const DominoTableau& t, int i) {
    if (i < 1 || i > t.rank()) return false;
    if (i == 1) return t.domino(1).vertical();
    return t.domino(i).a.row > t.domino(i - 1).a.row;
}

// ---------------------------------------------------------------- identifiers

OperatorId OperatorId::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { return std::invalid_argument("unknown operator literal '" + s + "'"); };
    auto colon = s.find(':');
    if (colon == std::string::npos) throw bad();
    std::string head = s.substr(0, colon), arg = s.substr(colon + 1);
    auto to_int = [&](const std::string& x) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(x, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != x.size()) throw bad();
        return v;
    };
    if (head == "T") {
        auto comma = arg.find(',');
        if (comma == std::string::npos) throw bad();
        int i = to_int(arg.substr(0, comma)), j = to_int(arg.substr(comma + 1));
        if (i < 2 || j < 2 || std::abs(i - j) != 1) throw std::invalid_argument("T:i,j needs adjacent i,j >= 2");
        return same_length(i, j);
    }
    if (head == "UL") {
        if (arg == "fwd") return u_left(true);
        if (arg == "rev") return u_left(false);
        throw bad();
    }
    bool transposed = false;
    if (!head.empty() && head[0] == 't') {
        transposed = true;
        head = head.substr(1);
    }
    bool prime = false;
    if (!head.empty() && head.back() == '\'') {
        prime = true;
        head.pop_back();
    }
    int n = to_int(arg);
    if (n < 2) throw std::invalid_argument("S-family index must be >= 2");
    if (head == "S") return s_family(prime, n, transposed);
    if (head == "EnlT") return enlarged(prime, n, transposed);
    throw bad();
}

std::string OperatorId::str() const {
    switch (type) {
    case Type::SameLength:
        return "T:" + std::to_string(i) + "," + std::to_string(j);
    case Type::DiffLengthL:
        return forward ? "UL:fwd" : "UL:rev";
    case Type::SFamily:
    case Type::Enlarged:
        break;
    }
    std::string s = transposed ? "t" : "";
    s += type == Type::SFamily ? "S" : "EnlT";
    if (prime) s += "'";
    return s + ":" + std::to_string(n);
}

OperatorId OperatorId::reversed() const {
    OperatorId r = *this;
    if (type == Type::SameLength) std::swap(r.i, r.j);
    if (type == Type::DiffLengthL) r.forward = !forward;
    return r;
}

OperatorSequence parse_sequence(std::string_view text) {
    OperatorSequence seq;
    std::vector<std::string> tokens;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        item = item.substr(b, e - b + 1);
        // a bare number continues the preceding "T:i" token
        if (!tokens.empty() && item.find(':') == std::string::npos && tokens.back().rfind("T:", 0) == 0 &&
            tokens.back().find(',') == std::string::npos)
            tokens.back() += "," + item;
        else
            tokens.push_back(item);
    }
    for (auto& t : tokens) seq.push_back(OperatorId::parse(t));
    return seq;
}

std::string to_string(const OperatorSequence& seq) {
    std::string s;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k) s += ',';
        s += seq[k].str();
    }
    return s;
}

// ----------------------------------------------------------- same length: T

namespace {

using Triple = std::array<Domino, 3>;

Triple normalized(const Triple& d, CellCoord& origin) {
    origin = {1 << 20, 1 << 20};
    for (auto& x : d) {
        origin.row = std::min({origin.row, x.a.row, x.b.row});
        origin.col = std::min({origin.col, x.a.col, x.b.col});
    }
    Triple r;
    for (int k = 0; k < 3; ++k)
        r[k] = Domino({d[k].a.row - origin.row, d[k].a.col - origin.col}, {d[k].b.row - origin.row, d[k].b.col - origin.col});
    return r;
}

// F-type interchanges of three consecutive dominos tiling a 3x2 or 2x3 rectangle.
const std::map<Triple, Triple>& f_configurations() {
    static const std::map<Triple, Triple> m = [] {
        std::vector<std::pair<Triple, Triple>> pairs = {
            {{Domino({0, 0}, {0, 1}), Domino({1, 0}, {2, 0}), Domino({1, 1}, {2, 1})},
             {Domino({0, 0}, {1, 0}), Domino({0, 1}, {1, 1}), Domino({2, 0}, {2, 1})}},
            {{Domino({0, 0}, {1, 0}), Domino({0, 1}, {0, 2}), Domino({1, 1}, {1, 2})},
             {Domino({0, 0}, {0, 1}), Domino({1, 0}, {1, 1}), Domino({0, 2}, {1, 2})}},
        };
        std::map<Triple, Triple> r;
        for (auto& [a, b] : pairs) {
            r[a] = b;
            r[b] = a;
        }
        return r;
    }();
    return m;
}

bool tau_pattern(const DominoTableau& t, int has, int lacks) { return in_tau(t, has) && !in_tau(t, lacks); }

}  // namespace

std::optional<DominoTableau> T_same_length(int i, int j, const DominoTableau& t) {
    if (i < 2 || j < 2 || std::abs(i - j) != 1) throw std::invalid_argument("T_{alpha_i alpha_j} needs adjacent i,j >= 2");
    if (std::max(i, j) > t.rank()) return std::nullopt;
    if (!tau_pattern(t, j, i)) return std::nullopt;
    const int lo = std::min(i, j);
    Triple d{t.domino(lo - 1), t.domino(lo), t.domino(lo + 1)};
    CellCoord o;
    auto key = normalized(d, o);
    const auto& fm = f_configurations();
    if (auto it = fm.find(key); it != fm.end()) {
        DominoTableau r = t;
        for (int k = 0; k < 3; ++k) {
            const auto& x = it->second[k];
            r.set_domino(lo - 1 + k, Domino({x.a.row + o.row, x.a.col + o.col}, {x.b.row + o.row, x.b.col + o.col}));
        }
        if (r.valid() && tau_pattern(r, i, j)) return r;
    }
    for (auto [p, q] : {std::pair{lo - 1, lo}, std::pair{lo, lo + 1}}) {
        auto r = t.with_labels_swapped(p, q);
        if (r.valid() && tau_pattern(r, i, j)) return r;
    }
    return std::nullopt;
}

std::optional<TableauPair> apply_T_same_length(int i, int j, const TableauPair& p) {
    auto r = T_same_length(i, j, p.left);
    if (!r) return std::nullopt;
    return TableauPair{*r, p.right};
}

// -------------------------------------------------------- different length: U^L

namespace {

std::optional<DominoTableau> u_recipe_first(bool forward, const DominoTableau& t) {
    if (t.rank() < 2) return std::nullopt;
    const Domino d1 = t.domino(1), d2 = t.domino(2);
    if (d1.horizontal() != forward) return std::nullopt;
    std::set<CellCoord> cells{d1.a, d1.b, d2.a, d2.b};
    DominoTableau r = t;
    if (t.kind() == Kind::C) {
        if (cells != std::set<CellCoord>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) return std::nullopt;
    } else {
        if (cells != std::set<CellCoord>{{1, 2}, {1, 3}, {2, 1}, {3, 1}}) return std::nullopt;
    }
    r.set_domino(1, d1.transposed());
    r.set_domino(2, d2.transposed());
    return r;
}

std::vector<DominoTableau> u_recipe(bool forward, const DominoTableau& t) {
    std::vector<DominoTableau> out;
    auto first = u_recipe_first(forward, t);
    if (!first) return out;
    out.push_back(*first);
    for (const auto& c : cycles(*first)) {
        if (c.open || c.core) continue;
        if (!std::binary_search(c.labels.begin(), c.labels.end(), 2)) continue;
        auto m = move_through(*first, c);
        if (m.valid()) out.push_back(m);
    }
    return out;
}

}  // namespace

std::vector<DominoTableau> U_left(bool forward, const DominoTableau& t, UlMode mode) {
    auto out = u_recipe(forward, t);
    if (mode == UlMode::Closure && t.rank() >= 2) {
        // t is an image two of some T*: t = move(recipe_first(T*)) through the closed cycle of 2.
        for (const auto& c : cycles(t)) {
            if (c.open || c.core) continue;
            if (!std::binary_search(c.labels.begin(), c.labels.end(), 2)) continue;
            auto m = move_through(t, c);
            if (!m.valid()) continue;
            auto cand = u_recipe_first(forward, m);
            if (!cand) continue;
            auto back = u_recipe(!forward, *cand);
            if (std::find(back.begin(), back.end(), t) != back.end()) out.push_back(*cand);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<TableauPair> apply_U_left(bool forward, const TableauPair& p, UlMode mode) {
    std::vector<TableauPair> out;
    for (auto& t : U_left(forward, p.left, mode)) out.push_back({t, p.right});
    return out;
}

// ------------------------------------------------------------------ S-family

SConfiguration s_configuration(Kind kind, bool prime, int n, bool transposed) {
    Shape q = quasi_staircase_shape(prime ? StaircaseFamily::Tau : StaircaseFamily::Sigma, n, kind);
    int r = 2;
    while (q.rho(r) != q.rho(r + 1)) ++r;
    const int len = q.rho(r), above = q.rho(r - 1);
    SConfiguration cfg;
    cfg.region = q;
    cfg.dominos = (q.total() - (kind == Kind::B ? 1 : 0)) / 2;
    cfg.vertical = Domino({r, len}, {r + 1, len});
    cfg.horizontal = Domino({r - 1, above - 1}, {r - 1, above});
    if (transposed) {
        cfg.region = q.transpose();
        cfg.vertical = cfg.vertical.transposed();
        cfg.horizontal = cfg.horizontal.transposed();
    }
    return cfg;
}

DominoTableau canonical_filling(Kind kind, bool prime, int n, bool transposed) {
    static std::mutex mu;
    static std::map<std::tuple<Kind, bool, int, bool>, DominoTableau> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(kind, prime, n, transposed);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto cfg = s_configuration(kind, prime, n, transposed);
    const int m = cfg.dominos;
    for (const auto& t : enumerate_tableaux(cfg.region, kind))
        if (t.domino(m) == cfg.vertical && t.domino(m - 1) == cfg.horizontal) return cache[key] = t;
    throw std::logic_error("no canonical filling for the quasi-staircase");
}

std::optional<DominoTableau> S_family(const OperatorId& id, const DominoTableau& t, SMode mode) {
    auto cfg = s_configuration(t.kind(), id.prime, id.n, id.transposed);
    const int m = cfg.dominos;
    if (t.rank() < m) return std::nullopt;
    const Domino a = t.domino(m - 1), b = t.domino(m);
    bool config = (a == cfg.horizontal && b == cfg.vertical) || (a == cfg.vertical && b == cfg.horizontal);
    if (!config) return std::nullopt;
    auto pre = t.prefix(m);
    if (mode == SMode::Strict) {
        auto tt = canonical_filling(t.kind(), id.prime, id.n, id.transposed);
        if (!(pre == tt || pre == tt.with_labels_swapped(m - 1, m))) return std::nullopt;
    } else if (!(pre.shape() == cfg.region)) {
        return std::nullopt;
    }
    return t.with_labels_swapped(m - 1, m);
}

std::optional<TableauPair> apply_S(const OperatorId& id, const TableauPair& p, SMode mode) {
    auto r = S_family(id, p.left, mode);
    if (!r) return std::nullopt;
    return TableauPair{*r, p.right};
}

// ------------------------------------------------------------------ enlarged

namespace {

std::optional<DominoTableau> box_transpose(const DominoTableau& t, int d1, int d2) {
    const Domino x = t.domino(d1), y = t.domino(d2);
    std::set<CellCoord> cells{x.a, x.b, y.a, y.b};
    const CellCoord o = *cells.begin();
    if (cells != std::set<CellCoord>{o, {o.row, o.col + 1}, {o.row + 1, o.col}, {o.row + 1, o.col + 1}})
        return std::nullopt;
    auto flip = [&](CellCoord c) { return CellCoord{o.row + (c.col - o.col), o.col + (c.row - o.row)}; };
    DominoTableau r = t;
    r.set_domino(d1, Domino(flip(x.a), flip(x.b)));
    r.set_domino(d2, Domino(flip(y.a), flip(y.b)));
    return r;
}

std::optional<ExtendedOpenCycle> extended_cycle_of(const TableauPair& p, int label) {
    for (auto& e : extended_open_cycles(p))
        if (std::binary_search(e.left_labels.begin(), e.left_labels.end(), label)) return e;
    return std::nullopt;
}

bool same_shape_valid(const TableauPair& p) { return p.valid(); }

}  // namespace

std::vector<TableauPair> apply_enlarged(const OperatorId& id, const TableauPair& p, EnlargedReading reading) {
    const OperatorId x = OperatorId::s_family(id.prime, id.n, id.transposed);
    auto cfg = s_configuration(p.left.kind(), id.prime, id.n, id.transposed);
    if (p.left.rank() < cfg.dominos) return {};

    // Domain: some set of extended open cycles moves the pair into the domain of X.
    auto ex = extended_open_cycles(p);
    const int r = static_cast<int>(ex.size());
    bool in_domain = false;
    for (int mask = 0; mask < (1 << r) && !in_domain; ++mask) {
        std::vector<ExtendedOpenCycle> sub;
        for (int k = 0; k < r; ++k)
            if (mask >> k & 1) sub.push_back(ex[k]);
        in_domain = S_family(x, move_pair_through(p, sub).left).has_value();
    }
    if (!in_domain) return {};

    // The two largest dominos lying inside the quasi-staircase region.
    int d1 = 0, d2 = 0;
    for (int l = p.left.rank(); l >= 1 && !d2; --l) {
        const auto& d = p.left.domino(l);
        if (cfg.region.contains(d.a) && cfg.region.contains(d.b)) (d1 ? d2 : d1) = l;
    }
    if (!d2) return {};

    std::vector<TableauPair> out;
    auto keep = [&](const TableauPair& q) {
        if (same_shape_valid(q)) out.push_back(q);
    };
    if (id.prime) {
        keep({p.left.with_labels_swapped(d1, d2), p.right});
        return out;
    }
    auto with_second = [&](const TableauPair& first) {
        keep(first);
        auto e = extended_cycle_of(first, d1);
        if (!e) return;
        bool second = reading == EnlargedReading::ContainsD2 &&
                      !std::binary_search(e->left_labels.begin(), e->left_labels.end(), d2);
        if (second) keep(move_pair_through(first, {*e}));
    };
    if (auto b = box_transpose(p.left, d1, d2)) {
        with_second({*b, p.right});
    } else if (auto s = S_family(x, p.left)) {
        with_second({*s, p.right});
    } else if (auto e = extended_cycle_of(p, d2)) {
        auto q = move_pair_through(p, {*e});
        if (auto b2 = box_transpose(q.left, d1, d2))
            keep({*b2, q.right});
        else if (auto s2 = S_family(x, q.left))
            keep({*s2, q.right});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------- dispatch

std::vector<TableauPair> apply(const OperatorId& op, const TableauPair& p, const OperatorOptions& opt) {
    std::vector<TableauPair> out;
    switch (op.type) {
    case OperatorId::Type::SameLength:
        if (auto r = apply_T_same_length(op.i, op.j, p)) out.push_back(*r);
        break;
    case OperatorId::Type::DiffLengthL:
        out = apply_U_left(op.forward, p, opt.ul_mode);
        break;
    case OperatorId::Type::SFamily:
        if (auto r = apply_S(op, p, opt.s_mode)) out.push_back(*r);
        break;
    case OperatorId::Type::Enlarged:
        out = apply_enlarged(op, p, opt.enlarged_reading);
        break;
    }
    return out;
}

std::vector<TableauPair> apply_sequence(const OperatorSequence& seq, const TableauPair& p, const OperatorOptions& opt) {
    std::set<TableauPair> cur{p};
    for (const auto& op : seq) {
        std::set<TableauPair> next;
        for (const auto& q : cur)
            for (auto& r : apply(op, q, opt)) next.insert(std::move(r));
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

std::vector<OperatorId> operators_for_rank(Kind kind, int rank, unsigned families) {
    std::vector<OperatorId> ops;
    if (families & kFamilyT)
        for (int i = 2; i + 1 <= rank; ++i) {
            ops.push_back(OperatorId::same_length(i, i + 1));
            ops.push_back(OperatorId::same_length(i + 1, i));
        }
    if ((families & kFamilyU) && rank >= 2) {
        ops.push_back(OperatorId::u_left(true));
        ops.push_back(OperatorId::u_left(false));
    }
    for (unsigned fam : {unsigned(kFamilyS), unsigned(kFamilyEnlarged)}) {
        if (!(families & fam)) continue;
        for (int n = 2; s_configuration(kind, false, n, false).dominos <= rank; ++n)
            for (bool prime : {false, true}) {
                if (s_configuration(kind, prime, n, false).dominos > rank) continue;
                for (bool t : {false, true})
                    ops.push_back(fam == kFamilyS ? OperatorId::s_family(prime, n, t) : OperatorId::enlarged(prime, n, t));
            }
    }
    return ops;
}

}  // namespace domino
