#include "domino/reps.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace domino {

namespace {

struct RimHook {
    std::vector<int> parts;
    int sign;
};

// All partitions obtained by removing a rim hook of length k, with (-1)^height.
std::vector<RimHook> remove_rim_hooks(const std::vector<int>& parts, int k) {
    const int m = static_cast<int>(parts.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = parts[i] + (m - 1 - i);  // strictly decreasing
    std::vector<RimHook> out;
    for (int i = 0; i < m; ++i) {
        const int b = beta[i] - k;
        if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > b && x < beta[i]) ++between;
        auto nb = beta;
        nb[i] = b;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> np;
        for (int j = 0; j < m; ++j)
            if (int v = nb[j] - (m - 1 - j); v > 0) np.push_back(v);
        out.push_back({np, between % 2 ? -1 : 1});
    }
    return out;
}

using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

std::int64_t mn(const std::vector<int>& a, const std::vector<int>& b, std::vector<int> cycles,
                std::map<Key, std::int64_t>& memo) {
    if (cycles.empty()) return a.empty() && b.empty() ? 1 : 0;
    Key key{a, b, cycles};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int c = cycles.back();  // signed cycle length
    cycles.pop_back();
    const int k = std::abs(c);
    std::int64_t v = 0;
    for (auto& h : remove_rim_hooks(a, k)) v += h.sign * mn(h.parts, b, cycles, memo);
    for (auto& h : remove_rim_hooks(b, k)) v += (c < 0 ? -1 : 1) * h.sign * mn(a, h.parts, cycles, memo);
    return memo[key] = v;
}

std::vector<int> signed_cycles(const SignedCycleType& t) {
    std::vector<int> c;
    for (int p : t.positive.parts()) c.push_back(p);
    for (int p : t.negative.parts()) c.push_back(-p);
    std::sort(c.begin(), c.end());
    return c;
}

}  // namespace

ClassFunction irreducible_character(const Bipartition& bp, int n) {
    if (bp.size() != n) throw std::invalid_argument("bipartition size does not match the rank");
    std::map<Key, std::int64_t> memo;
    ClassFunction chi;
    for (auto& cls : conjugacy_classes(n))
        chi.push_back(mn(bp.first.parts(), bp.second.parts(), signed_cycles(cls.type), memo));
    return chi;
}

std::int64_t CharacterTable::order() const {
    std::int64_t o = 0;
    for (auto& c : classes) o += c.size;
    return o;
}

nlohmann::json CharacterTable::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    auto& cls = j["classes"] = nlohmann::json::array();
    for (auto& c : classes)
        cls.push_back({{"type", c.type.str()}, {"representative", c.representative.str()}, {"size", c.size}});
    auto& rows = j["characters"] = nlohmann::json::array();
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
        rows.push_back({{"bipartition", irreducibles[i].str()}, {"values", values[i]}});
    return j;
}

const CharacterTable& character_table(int n) {
    static std::mutex mu;
    static std::map<int, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    CharacterTable t;
    t.n = n;
    t.classes = conjugacy_classes(n);
    t.irreducibles = bipartitions(n);
    for (auto& bp : t.irreducibles) t.values.push_back(irreducible_character(bp, n));
    return cache[n] = std::move(t);
}

Rational inner_product(int n, const ClassFunction& a, const ClassFunction& b) {
    const auto& t = character_table(n);
    if (a.size() != t.classes.size() || b.size() != t.classes.size())
        throw std::invalid_argument("class function length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(t.classes[i].size) * a[i] * b[i];
    return s / t.order();
}

std::vector<std::pair<Bipartition, std::int64_t>> decompose(const ClassFunction& chi, int n) {
    const auto& t = character_table(n);
    std::vector<std::pair<Bipartition, std::int64_t>> out;
    for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
        Rational m = inner_product(n, chi, t.values[i]);
        if (denominator(m) != 1 || m < 0) throw std::invalid_argument("not a character");
        if (m != 0) out.push_back({t.irreducibles[i], static_cast<std::int64_t>(numerator(m))});
    }
    return out;
}

Bipartition identify(const ClassFunction& chi, int n) {
    auto d = decompose(chi, n);
    if (d.size() != 1 || d[0].second != 1) throw std::invalid_argument("character is not irreducible");
    return d[0].first;
}

Subspace generated_submodule(const CellModule& m, const std::vector<QVector>& seeds) {
    std::vector<QMatrix> ops;
    for (auto& g : m.generators) ops.push_back(to_rational(g));
    auto s = invariant_closure(seeds, ops);
    if (s.ambient() != m.dim()) throw std::invalid_argument("seed dimension mismatch");
    return s;
}

ClassFunction module_character(const CellModule& m) {
    ClassFunction chi;
    for (auto& c : conjugacy_classes(static_cast<int>(m.generators.size()))) {
        auto e = element_matrix(m, c.representative);
        std::int64_t tr = 0;
        for (int i = 0; i < m.dim(); ++i) tr += e[i][i];
        chi.push_back(tr);
    }
    return chi;
}

ClassFunction module_character(const CellModule& m, const Subspace& sub) {
    ClassFunction chi;
    for (auto& c : conjugacy_classes(static_cast<int>(m.generators.size()))) {
        Rational tr = restricted_trace(to_rational(element_matrix(m, c.representative)), sub);
        if (denominator(tr) != 1) throw std::logic_error("non-integral trace");
        chi.push_back(static_cast<std::int64_t>(numerator(tr)));
    }
    return chi;
}

}  // namespace domino
