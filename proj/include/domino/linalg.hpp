#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace domino {

using Rational = boost::multiprecision::cpp_rational;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major

QMatrix to_rational(const std::vector<std::vector<std::int64_t>>& m);
QVector mat_vec(const QMatrix& a, const QVector& v);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
bool is_zero(const QVector& v);

// Incrementally maintained basis of a subspace in reduced echelon form: every
// basis vector has a pivot coordinate where it is 1 and all others are 0.
class Subspace {
public:
    explicit Subspace(int dim) : dim_(dim) {}
    int ambient() const { return dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<QVector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    QVector reduce(QVector v) const;  // remainder modulo the subspace
    bool add(const QVector& v);       // true if v enlarged the subspace
    bool contains(const QVector& v) const { return is_zero(reduce(v)); }
    QVector coordinates(const QVector& v) const;  // v must lie in the subspace

private:
    int dim_;
    std::vector<QVector> basis_;
    std::vector<int> pivots_;
};

// Smallest subspace containing `seeds` and stable under every operator.
Subspace invariant_closure(const std::vector<QVector>& seeds, const std::vector<QMatrix>& operators);

// Trace of `a` restricted to an a-stable subspace.
Rational restricted_trace(const QMatrix& a, const Subspace& s);

int rank(QMatrix m);
std::vector<QVector> nullspace(QMatrix m);

}  // namespace domino
