#include "domino/linalg.hpp"

#include <stdexcept>

namespace domino {

QMatrix to_rational(const std::vector<std::vector<std::int64_t>>& m) {
    QMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
    return r;
}

QVector mat_vec(const QMatrix& a, const QVector& v) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
    return r;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    QMatrix r(a.size(), QVector(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

bool is_zero(const QVector& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

QVector Subspace::reduce(QVector v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Rational c = v[pivots_[k]];
        if (c == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (basis_[k][j] != 0) v[j] -= c * basis_[k][j];
    }
    return v;
}

bool Subspace::add(const QVector& v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("dimension mismatch");
    QVector r = reduce(v);
    int p = -1;
    for (int j = 0; j < dim_ && p < 0; ++j)
        if (r[j] != 0) p = j;
    if (p < 0) return false;
    const Rational c = r[p];
    for (auto& x : r) x /= c;
    for (auto& b : basis_) {
        const Rational f = b[p];
        if (f == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (r[j] != 0) b[j] -= f * r[j];
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

QVector Subspace::coordinates(const QVector& v) const {
    if (!contains(v)) throw std::invalid_argument("vector outside the subspace");
    QVector c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

Subspace invariant_closure(const std::vector<QVector>& seeds, const std::vector<QMatrix>& operators) {
    const int d = seeds.empty() ? (operators.empty() ? 0 : static_cast<int>(operators[0].size()))
                                : static_cast<int>(seeds[0].size());
    Subspace s(d);
    std::vector<QVector> queue;
    for (auto& v : seeds)
        if (s.add(v)) queue.push_back(v);
    while (!queue.empty()) {
        QVector v = std::move(queue.back());
        queue.pop_back();
        for (auto& a : operators) {
            QVector w = mat_vec(a, v);
            if (s.add(w)) queue.push_back(std::move(w));
        }
    }
    return s;
}

Rational restricted_trace(const QMatrix& a, const Subspace& s) {
    Rational t = 0;
    for (int k = 0; k < s.dim(); ++k) {
        const auto& b = s.basis()[k];
        const int p = s.pivots()[k];
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) t += a[p][j] * b[j];
    }
    return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
    std::vector<int> piv;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows && p < 0; ++i)
            if (m[i][c] != 0) p = i;
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<QVector> nullspace(QMatrix m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    auto piv = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (int c : piv) is_pivot[c] = 1;
    std::vector<QVector> out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVector v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m[k][f];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace domino
