#include "domino/kl.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "domino/graph.hpp"
#include "domino/parallel.hpp"

namespace domino {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("KL coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("KL coefficient overflow");
    return r;
}

// r += c * q^shift * p
void add_scaled(KLPolynomial& r, const KLPolynomial& p, int shift, std::int64_t c) {
    if (p.empty() || c == 0) return;
    if (r.size() < p.size() + shift) r.resize(p.size() + shift, 0);
    for (std::size_t i = 0; i < p.size(); ++i) r[i + shift] = checked_add(r[i + shift], checked_mul(c, p[i]));
}

void trim(KLPolynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

struct PolyHash {
    std::size_t operator()(const KLPolynomial& p) const { return boost::hash_range(p.begin(), p.end()); }
};

}  // namespace

std::string to_string(const KLPolynomial& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        std::int64_t c = p[i];
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        c = std::abs(c);
        if (i == 0 || c != 1) s += std::to_string(c);
        if (i >= 1) s += "q";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

std::optional<std::string> default_cache_dir() {
    if (const char* d = std::getenv("DOMINO_CACHE_DIR"); d && *d) return std::string(d);
    return std::nullopt;
}

KLTable::KLTable(int n, const KLOptions& opt) : n_(n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (n > opt.max_rank && !opt.allow_large)
        throw std::invalid_argument("rank " + std::to_string(n) + " exceeds the KL bound " +
                                    std::to_string(opt.max_rank) + " (use --allow-large)");
    elements_ = enumerate_group(n);
    std::stable_sort(elements_.begin(), elements_.end(),
                     [](const auto& a, const auto& b) { return domino::length(a) < domino::length(b); });
    const int N = size();
    const double bytes = static_cast<double>(N) * N * sizeof(std::uint32_t);
    if (bytes > 4.0 * (1ull << 30))
        throw std::length_error("the full P_{x,w} table for rank " + std::to_string(n) + " needs " +
                                std::to_string(static_cast<long long>(bytes / (1 << 20))) + " MiB");
    length_.resize(N);
    ldes_.resize(N);
    rdes_.resize(N);
    inv_.resize(N);
    lmul_.assign(n, std::vector<int>(N));
    rmul_.assign(n, std::vector<int>(N));
    for (int i = 0; i < N; ++i) {
        length_[i] = domino::length(elements_[i]);
        ldes_[i] = descent_mask(elements_[i], Side::Left);
        rdes_[i] = descent_mask(elements_[i], Side::Right);
    }
    for (int i = 0; i < N; ++i) {
        inv_[i] = index(inverse(elements_[i]));
        for (int s = 1; s <= n; ++s) {
            lmul_[s - 1][i] = index(left_mul_generator(s, elements_[i]));
            rmul_[s - 1][i] = index(right_mul_generator(elements_[i], s));
        }
    }

    auto dir = opt.cache_dir ? opt.cache_dir : default_cache_dir();
    if (dir && opt.use_cache) {
        cache_file_ = (std::filesystem::path(*dir) / ("kl_B" + std::to_string(n) + ".jsonl")).string();
        if (std::filesystem::exists(*cache_file_) && load(*cache_file_)) {
            from_cache_ = true;
            finish();
            return;
        }
    }
    compute(opt.threads);
    finish();
    if (cache_file_) save(*cache_file_);
}

int KLTable::index(const SignedPermutation& w) const {
    if (w.rank() != n_) throw std::invalid_argument("rank mismatch");
    // elements are sorted by length, then lexicographically within a length
    const int l = domino::length(w);
    auto lo = std::lower_bound(length_.begin(), length_.end(), l) - length_.begin();
    auto hi = std::upper_bound(length_.begin(), length_.end(), l) - length_.begin();
    auto it = std::lower_bound(elements_.begin() + lo, elements_.begin() + hi, w);
    if (it == elements_.begin() + hi || !(*it == w)) throw std::invalid_argument("not a group element");
    return static_cast<int>(it - elements_.begin());
}

void KLTable::compute(int threads) {
    const int N = size();
    pool_.clear();
    std::unordered_map<KLPolynomial, std::uint32_t, PolyHash> ids;
    auto put = [&](KLPolynomial p) {
        auto [it, fresh] = ids.emplace(std::move(p), static_cast<std::uint32_t>(pool_.size()));
        if (fresh) pool_.push_back(it->first);
        return it->second;
    };
    put({});
    put({1});
    table_.assign(static_cast<std::size_t>(N) * N, 0);
    mu_below_.assign(N, {});
    auto at = [&](int x, int w) -> std::uint32_t& { return table_[static_cast<std::size_t>(x) * N + w]; };
    at(0, 0) = 1;
    std::vector<KLPolynomial> column(N);
    for (int w = 1; w < N; ++w) {
        const int s = std::countr_zero(ldes_[w]) + 1;
        const int v = lmul_[s - 1][w];
        std::vector<std::pair<int, int>> terms;  // z < v with mu(z,v) != 0 and s in L(z)
        for (auto [z, m] : mu_below_[v])
            if (ldes_[z] >> (s - 1) & 1) terms.push_back({z, m});
        parallel_for(N, threads, [&](int x) {
            column[x].clear();
            if (length_[x] > length_[w] || !(ldes_[x] >> (s - 1) & 1)) return;
            const int sx = lmul_[s - 1][x];
            KLPolynomial r;
            add_scaled(r, P(sx, v), 0, 1);
            add_scaled(r, P(x, v), 1, 1);
            for (auto [z, m] : terms) add_scaled(r, P(x, z), (length_[w] - length_[z]) / 2, -m);
            trim(r);
            column[x] = std::move(r);
        });
        for (int x = 0; x < N; ++x)
            if (ldes_[x] >> (s - 1) & 1) at(x, w) = column[x].empty() ? 0 : put(std::move(column[x]));
        for (int x = 0; x < N; ++x)
            if (!(ldes_[x] >> (s - 1) & 1)) at(x, w) = at(lmul_[s - 1][x], w);
        for (int x = 0; x < w; ++x) {
            const int d = length_[w] - length_[x] - 1;
            if (d < 0 || d % 2) continue;
            const auto& p = P(x, w);
            if (static_cast<int>(p.size()) > d / 2 && p[d / 2] != 0)
                mu_below_[w].push_back({x, static_cast<int>(p[d / 2])});
        }
    }
}

void KLTable::finish() {
    const int N = size();
    if (mu_below_.size() != static_cast<std::size_t>(N)) {
        mu_below_.assign(N, {});
        for (int w = 0; w < N; ++w)
            for (int x = 0; x < w; ++x) {
                const int d = length_[w] - length_[x] - 1;
                if (d < 0 || d % 2) continue;
                const auto& p = P(x, w);
                if (static_cast<int>(p.size()) > d / 2 && p[d / 2] != 0)
                    mu_below_[w].push_back({x, static_cast<int>(p[d / 2])});
            }
    }
    wgraph_.assign(N, {});
    for (int w = 0; w < N; ++w)
        for (auto [z, m] : mu_below_[w]) {
            wgraph_[w].push_back({z, m});
            wgraph_[z].push_back({w, m});
        }
    for (auto& adj : wgraph_) std::sort(adj.begin(), adj.end());
}

bool KLTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    const int N = size();
    pool_.clear();
    std::unordered_map<KLPolynomial, std::uint32_t, PolyHash> ids;
    auto put = [&](KLPolynomial p) {
        auto [it, fresh] = ids.emplace(std::move(p), static_cast<std::uint32_t>(pool_.size()));
        if (fresh) pool_.push_back(it->first);
        return it->second;
    };
    put({});
    put({1});
    table_.assign(static_cast<std::size_t>(N) * N, 0);
    std::string line;
    std::size_t diagonal = 0;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line);
            if (j.at("n").get<int>() != n_) return false;
            const int u = index(SignedPermutation::parse(j.at("u").get<std::string>()));
            const int v = index(SignedPermutation::parse(j.at("v").get<std::string>()));
            auto p = j.at("p").get<KLPolynomial>();
            trim(p);
            table_[static_cast<std::size_t>(u) * N + v] = p.empty() ? 0 : put(std::move(p));
            if (u == v) ++diagonal;
        }
    } catch (const std::exception&) {
        return false;
    }
    mu_below_.clear();
    return diagonal == static_cast<std::size_t>(N);
}

void KLTable::save(const std::string& path) const {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(fs::path(path).parent_path(), ec);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;  // the cache is advisory
        const int N = size();
        for (int v = 0; v < N; ++v)
            for (int u = 0; u <= v; ++u) {
                const auto& p = P(u, v);
                if (p.empty()) continue;
                nlohmann::json j = {{"n", n_}, {"u", elements_[u].str()}, {"v", elements_[v].str()}, {"p", p}};
                out << j.dump() << '\n';
            }
    }
    fs::rename(tmp, path, ec);
}

KLPolynomial KLTable::kl(const SignedPermutation& u, const SignedPermutation& v) const {
    if (u.rank() != n_ || v.rank() != n_) throw std::invalid_argument("rank mismatch");
    return P(index(u), index(v));
}

int KLTable::mu(int x, int w) const {
    for (auto [z, m] : mu_below_[static_cast<std::size_t>(w)])
        if (z == x) return m;
    return 0;
}

int KLTable::mu_sym(int x, int w) const { return length(x) < length(w) ? mu(x, w) : mu(w, x); }

long long inversion_identity_failures(const KLTable& t) {
    const int N = t.size();
    const auto w0 = longest_element(t.rank());
    std::vector<int> flip(N);
    for (int i = 0; i < N; ++i) flip[i] = t.index(multiply(w0, t.element(i)));
    long long bad = 0;
    for (int x = 0; x < N; ++x)
        for (int w = 0; w < N; ++w) {
            if (!t.leq(x, w)) continue;
            KLPolynomial acc;
            for (int z = 0; z < N; ++z) {
                const auto& a = t.P(x, z);
                if (a.empty()) continue;
                const auto& b = t.P(flip[w], flip[z]);
                if (b.empty()) continue;
                const std::int64_t sign = (t.length(x) + t.length(z)) % 2 ? -1 : 1;
                for (std::size_t i = 0; i < a.size(); ++i) add_scaled(acc, b, static_cast<int>(i), sign * a[i]);
            }
            trim(acc);
            if (acc != (x == w ? KLPolynomial{1} : KLPolynomial{})) ++bad;
        }
    return bad;
}

// ----------------------------------------------------------------------- cells

namespace {

std::vector<Cell> group_cells(const std::vector<int>& comp, int count, CellSide side) {
    std::vector<Cell> cells(count);
    for (auto& c : cells) c.side = side;
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) cells[comp[i]].elements.push_back(i);
    return cells;
}

}  // namespace

CellPartition compute_cells(const KLTable& t) {
    const int N = t.size();
    Digraph left(N), right(N), both(N);
    for (int y = 0; y < N; ++y)
        for (auto [x, m] : t.w_graph()[y]) {
            (void)m;
            const bool l = (t.left_descents(x) & ~t.left_descents(y)) != 0;
            const bool r = (t.right_descents(x) & ~t.right_descents(y)) != 0;
            if (l) left[y].push_back(x);
            if (r) right[y].push_back(x);
            if (l || r) both[y].push_back(x);
        }
    CellPartition cp;
    int nl = 0, nr = 0, nt = 0;
    cp.left_of = strongly_connected_components(left, &nl);
    cp.right_of = strongly_connected_components(right, &nr);
    cp.two_sided_of = strongly_connected_components(both, &nt);
    cp.left = group_cells(cp.left_of, nl, CellSide::Left);
    cp.right = group_cells(cp.right_of, nr, CellSide::Right);
    cp.two_sided = group_cells(cp.two_sided_of, nt, CellSide::TwoSided);
    return cp;
}

int CellModule::position(int element) const {
    auto it = std::lower_bound(cell.elements.begin(), cell.elements.end(), element);
    if (it == cell.elements.end() || *it != element) return -1;
    return static_cast<int>(it - cell.elements.begin());
}

CellModule cell_module(const KLTable& t, const Cell& c) {
    if (c.side != CellSide::Left) throw std::invalid_argument("cell modules are built on left cells");
    CellModule m;
    m.cell = c;
    const int d = m.dim();
    for (int s = 1; s <= t.rank(); ++s) {
        IntMatrix g(d, std::vector<std::int64_t>(d, 0));
        for (int col = 0; col < d; ++col) {
            const int w = c.elements[col];
            if (t.left_descents(w) >> (s - 1) & 1) {
                g[col][col] = -1;
                continue;
            }
            g[col][col] = 1;
            for (auto [z, mu] : t.w_graph()[w]) {
                if (!(t.left_descents(z) >> (s - 1) & 1)) continue;
                const int row = m.position(z);
                if (row >= 0) g[row][col] += mu;
            }
        }
        m.generators.push_back(std::move(g));
    }
    return m;
}

const IntMatrix& act(const CellModule& m, int s) {
    if (s < 1 || s > static_cast<int>(m.generators.size())) throw std::out_of_range("generator index");
    return m.generators[static_cast<std::size_t>(s - 1)];
}

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix r(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) r[i][j] = checked_add(r[i][j], checked_mul(a[i][k], b[k][j]));
    return r;
}

IntMatrix identity(std::size_t n) {
    IntMatrix r(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

}  // namespace

IntMatrix element_matrix(const CellModule& m, const SignedPermutation& w) {
    IntMatrix r = identity(static_cast<std::size_t>(m.dim()));
    for (int s : reduced_word(w)) r = multiply(r, act(m, s));
    return r;
}

std::vector<std::string> coxeter_relation_failures(const CellModule& m) {
    std::vector<std::string> out;
    const int n = static_cast<int>(m.generators.size());
    const auto id = identity(static_cast<std::size_t>(m.dim()));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const int order = i == j ? 2 : (j == i + 1 ? (i == 1 ? 4 : 3) : 2);
            auto st = i == j ? act(m, i) : multiply(act(m, i), act(m, j));
            IntMatrix p = id;
            for (int k = 0; k < order; ++k) p = multiply(p, st);
            if (p != id)
                out.push_back("(s" + std::to_string(i) + " s" + std::to_string(j) + ")^" + std::to_string(order) +
                              " != 1");
        }
    return out;
}

}  // namespace domino
