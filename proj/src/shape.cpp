#include "domino/shape.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace domino {

char kind_char(Kind k) { return k == Kind::B ? 'B' : 'C'; }

Kind parse_kind(std::string_view text) {
    if (text == "B" || text == "b") return Kind::B;
    if (text == "C" || text == "c") return Kind::C;
    throw std::invalid_argument("unknown tableau kind '" + std::string(text) + "' (expected B or C)");
}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("shape parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("shape parts must be weakly decreasing");
    }
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Shape Shape::parse(std::string_view text) {
    std::vector<int> parts;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item.substr(b), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed shape '" + std::string(text) + "'");
        }
        if (item.find_first_not_of(" \t", b + used) != std::string::npos)
            throw std::invalid_argument("malformed shape '" + std::string(text) + "'");
        parts.push_back(v);
    }
    return Shape(std::move(parts));
}

Shape Shape::from_cells(const std::vector<CellCoord>& cells) {
    std::set<CellCoord> s(cells.begin(), cells.end());
    if (s.size() != cells.size()) throw std::invalid_argument("repeated cell");
    std::vector<int> rows;
    for (auto c : s) {
        if (c.row < 1 || c.col < 1) throw std::invalid_argument("cell outside the quadrant");
        if (static_cast<int>(rows.size()) < c.row) rows.resize(c.row, 0);
        rows[c.row - 1]++;
    }
    for (auto c : s) {
        if (c.row > 1 && !s.count({c.row - 1, c.col})) throw std::invalid_argument("cells do not form a shape");
        if (c.col > 1 && !s.count({c.row, c.col - 1})) throw std::invalid_argument("cells do not form a shape");
    }
    return Shape(std::move(rows));
}

int Shape::rho(int i) const {
    if (i < 1 || i > rows()) return 0;
    return parts_[i - 1];
}

int Shape::kappa(int j) const {
    if (j < 1) return 0;
    int k = 0;
    while (k < rows() && parts_[k] >= j) ++k;
    return k;
}

Shape Shape::transpose() const {
    std::vector<int> t;
    for (int j = 1; j <= rho(1); ++j) t.push_back(kappa(j));
    return Shape(std::move(t));
}

std::vector<CellCoord> Shape::cells() const {
    std::vector<CellCoord> out;
    out.reserve(total_);
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
    return out;
}

std::string Shape::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

// Beta-set (distinct nonnegative integers) back to a partition.
Shape from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int k = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) parts.push_back(beta[i] - (k - 1 - i));
    return Shape(std::move(parts));
}

}  // namespace

// Abacus with two runners.  The bead count m is the smallest m >= #rows with
// m + |shape| odd; even beads give the first component.
CoreQuotient two_core_quotient(const Shape& s) {
    int m = s.rows();
    if ((m + s.total()) % 2 == 0) ++m;
    std::vector<int> even, odd;
    for (int i = 1; i <= m; ++i) {
        int b = s.rho(i) + m - i;
        if (b % 2 == 0)
            even.push_back(b / 2);
        else
            odd.push_back(b / 2);
    }
    std::vector<int> core_beta;
    for (int i = 0; i < static_cast<int>(even.size()); ++i) core_beta.push_back(2 * i);
    for (int i = 0; i < static_cast<int>(odd.size()); ++i) core_beta.push_back(2 * i + 1);
    CoreQuotient cq;
    cq.core = from_beta(core_beta);
    cq.quotient.first = from_beta(even);
    cq.quotient.second = from_beta(odd);
    return cq;
}

bool is_tilable(const Shape& s, Kind kind) {
    auto core = two_core_quotient(s).core;
    if (kind == Kind::C) return core.empty();
    return core == Shape({1});
}

std::vector<ExtremalPosition> extremal_positions(const Shape& s, Kind kind) {
    std::vector<ExtremalPosition> out;
    for (auto c : s.cells()) {
        for (CellCoord d : {CellCoord{c.row, c.col + 1}, CellCoord{c.row + 1, c.col}}) {
            if (!s.contains(d)) continue;
            std::vector<CellCoord> rest;
            for (auto e : s.cells())
                if (e != c && e != d) rest.push_back(e);
            try {
                if (is_tilable(Shape::from_cells(rest), kind)) out.push_back({c, d});
            } catch (const std::invalid_argument&) {
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Shape quasi_staircase_shape(StaircaseFamily f, int n, Kind kind) {
    if (n < 2) throw std::invalid_argument("quasi-staircase index must be >= 2");
    std::vector<int> p;
    auto down = [&](int hi, int lo) {
        for (int v = hi; v >= lo; --v) p.push_back(v);
    };
    if (kind == Kind::C) {
        down(2 * n + 1 + (f == StaircaseFamily::Tau ? 1 : 0), n + 3);
        p.push_back(n + 1);
        p.push_back(n + 1);
        down(n - 1, 1);
    } else if (f == StaircaseFamily::Sigma) {
        down(2 * n + 1, n + 2);
        p.push_back(n);
        p.push_back(n);
        down(n - 2, 1);
    } else {
        down(2 * n + 2, n + 4);
        p.push_back(n + 2);
        p.push_back(n + 2);
        down(n, 1);
    }
    return Shape(std::move(p));
}

std::optional<QuasiStaircase> quasi_staircase(const Shape& s, Kind kind) {
    // Sizes grow quadratically in n, so a short scan suffices.
    for (int n = 2; quasi_staircase_shape(StaircaseFamily::Sigma, n, kind).total() <= s.total(); ++n) {
        for (auto f : {StaircaseFamily::Sigma, StaircaseFamily::Tau}) {
            Shape q = quasi_staircase_shape(f, n, kind);
            if (q == s) return QuasiStaircase{f, n, false};
            if (q.transpose() == s) return QuasiStaircase{f, n, true};
        }
    }
    return std::nullopt;
}

Symbol symbol_of(const Bipartition& bp) {
    const int m = std::max({bp.first.rows() - 1, bp.second.rows(), 0});
    auto entries = [](const Shape& s, int len) {
        std::vector<int> v(s.parts().rbegin(), s.parts().rend());
        v.insert(v.begin(), len - static_cast<int>(v.size()), 0);
        for (int i = 0; i < len; ++i) v[i] += i;
        return v;
    };
    return {entries(bp.first, m + 1), entries(bp.second, m)};
}

bool is_special_symbol(const Symbol& sym) {
    std::vector<int> seq;
    for (std::size_t i = 0; i < sym.bottom.size(); ++i) {
        seq.push_back(sym.top[i]);
        seq.push_back(sym.bottom[i]);
    }
    if (!sym.top.empty()) seq.push_back(sym.top.back());
    return std::is_sorted(seq.begin(), seq.end());
}

bool is_special(const Shape& s, Kind kind) {
    if (!is_tilable(s, kind)) throw std::invalid_argument("shape " + s.str() + " is not tilable");
    return is_special_symbol(symbol_of(two_core_quotient(s).quotient));
}

std::vector<Shape> partitions(int n) {
    std::vector<Shape> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int mx) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, mx); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Bipartition> bipartitions(int n) {
    std::vector<Bipartition> out;
    for (int a = n; a >= 0; --a)
        for (const auto& l : partitions(a))
            for (const auto& m : partitions(n - a)) out.push_back({l, m});
    return out;
}

std::vector<Shape> tilable_shapes(int rank, Kind kind) {
    std::vector<Shape> out;
    for (auto& p : partitions(2 * rank + (kind == Kind::B ? 1 : 0)))
        if (is_tilable(p, kind)) out.push_back(p);
    return out;
}

std::int64_t count_standard_tableaux(const Shape& s) {
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (int k = 2; k <= s.total(); ++k) num *= k;
    for (auto c : s.cells()) den *= s.rho(c.row) - c.col + s.kappa(c.col) - c.row + 1;
    return (num / den).convert_to<std::int64_t>();
}

std::int64_t count_standard_bitableaux(const Bipartition& bp) {
    const int n = bp.size(), a = bp.first.total();
    std::int64_t binom = 1;
    for (int i = 1; i <= a; ++i) binom = binom * (n - a + i) / i;
    return binom * count_standard_tableaux(bp.first) * count_standard_tableaux(bp.second);
}

}  // namespace domino
