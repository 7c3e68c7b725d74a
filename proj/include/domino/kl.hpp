#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "domino/weyl.hpp"

namespace domino {

// Coefficients of 1, q, q^2, ...; no trailing zeros (the zero polynomial is empty).
using KLPolynomial = std::vector<std::int64_t>;
std::string to_string(const KLPolynomial& p);

struct KLOptions {
    int threads = 1;
    int max_rank = 4;  // ranks above need allow_large
    bool allow_large = false;
    // Directory of the line-delimited cache; defaults to $DOMINO_CACHE_DIR, none if unset.
    std::optional<std::string> cache_dir;
    bool use_cache = true;
};

// All P_{x,w} of W(B_n), elements indexed in (length, lexicographic) order.
class KLTable {
public:
    explicit KLTable(int n, const KLOptions& opt = {});

    int rank() const { return n_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<SignedPermutation>& elements() const { return elements_; }
    const SignedPermutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    int index(const SignedPermutation& w) const;

    int length(int i) const { return length_[static_cast<std::size_t>(i)]; }
    std::uint32_t left_descents(int i) const { return ldes_[static_cast<std::size_t>(i)]; }
    std::uint32_t right_descents(int i) const { return rdes_[static_cast<std::size_t>(i)]; }
    int left_mul(int s, int i) const { return lmul_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i)]; }
    int right_mul(int i, int s) const { return rmul_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i)]; }
    int inverse_index(int i) const { return inv_[static_cast<std::size_t>(i)]; }
    int longest() const { return size() - 1; }

    const KLPolynomial& P(int x, int w) const { return pool_[table_[static_cast<std::size_t>(x) * size() + w]]; }
    KLPolynomial kl(const SignedPermutation& u, const SignedPermutation& v) const;  // throws on rank mismatch
    bool leq(int x, int w) const { return !P(x, w).empty(); }  // Bruhat order
    int mu(int x, int w) const;      // 0 unless x < w
    int mu_sym(int x, int w) const;  // mu(x,w) or mu(w,x)
    // (z, mu(z,w)) for every z < w with nonzero mu.
    const std::vector<std::pair<int, int>>& mu_below(int w) const { return mu_below_[static_cast<std::size_t>(w)]; }
    // Pairs {x,y} with mu_sym != 0, as adjacency lists.
    const std::vector<std::vector<std::pair<int, int>>>& w_graph() const { return wgraph_; }

    std::size_t distinct_polynomials() const { return pool_.size(); }
    bool loaded_from_cache() const { return from_cache_; }
    std::optional<std::string> cache_file() const { return cache_file_; }

private:
    void compute(int threads);
    bool load(const std::string& path);
    void save(const std::string& path) const;
    void finish();

    int n_;
    std::vector<SignedPermutation> elements_;
    std::vector<int> length_, inv_;
    std::vector<std::uint32_t> ldes_, rdes_;
    std::vector<std::vector<int>> lmul_, rmul_;
    std::vector<KLPolynomial> pool_;
    std::vector<std::uint32_t> table_;
    std::vector<std::vector<std::pair<int, int>>> mu_below_;
    std::vector<std::vector<std::pair<int, int>>> wgraph_;
    bool from_cache_ = false;
    std::optional<std::string> cache_file_;
};

// Sum_z (-1)^{l(x)+l(z)} P_{x,z} P_{w0 w, w0 z} = delta_{x,w} for all x <= w;
// returns the number of failing pairs.
long long inversion_identity_failures(const KLTable& t);

enum class CellSide { Left, Right, TwoSided };
struct Cell {
    CellSide side = CellSide::Left;
    std::vector<int> elements;  // ascending table indices
};

struct CellPartition {
    std::vector<Cell> left, right, two_sided;  // each ordered by least element
    std::vector<int> left_of, right_of, two_sided_of;
};

// Left cells: strongly connected components of the preorder generated by
// y -> x whenever mu_sym(x,y) != 0 and L(x) is not contained in L(y).
CellPartition compute_cells(const KLTable& t);

// Left cell module at q = 1 in the C_w basis:
//   s.b_w = -b_w                                       if s in L(w)
//   s.b_w =  b_w + sum_{z in cell, s in L(z)} mu~(z,w) b_z   otherwise.
using IntMatrix = std::vector<std::vector<std::int64_t>>;
struct CellModule {
    Cell cell;
    std::vector<IntMatrix> generators;  // generators[s-1][row z][col w]
    int dim() const { return static_cast<int>(cell.elements.size()); }
    int position(int element) const;  // basis position, -1 if outside the cell
};
CellModule cell_module(const KLTable& t, const Cell& c);
const IntMatrix& act(const CellModule& m, int s);
IntMatrix element_matrix(const CellModule& m, const SignedPermutation& w);  // via a reduced word
std::vector<std::string> coxeter_relation_failures(const CellModule& m);

std::optional<std::string> default_cache_dir();  // $DOMINO_CACHE_DIR

}  // namespace domino
