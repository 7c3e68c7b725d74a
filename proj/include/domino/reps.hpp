#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "domino/kl.hpp"
#include "domino/linalg.hpp"
#include "domino/weyl.hpp"

namespace domino {

// Values on conjugacy_classes(n), in that order.
using ClassFunction = std::vector<std::int64_t>;

// Murnaghan-Nakayama for the wreath product: a cycle of length k is removed as
// a k-rim hook from either component; negative cycles removed from the second
// component carry an extra sign.
ClassFunction irreducible_character(const Bipartition& bp, int n);

struct CharacterTable {
    int n = 0;
    std::vector<ConjugacyClass> classes;
    std::vector<Bipartition> irreducibles;  // bipartitions(n) order
    std::vector<ClassFunction> values;      // values[irrep][class]
    std::int64_t order() const;
    nlohmann::json to_json() const;
};
const CharacterTable& character_table(int n);  // memoized

// <a, b> = (1/|W|) sum over classes |C| a(C) b(C)
Rational inner_product(int n, const ClassFunction& a, const ClassFunction& b);

// Multiplicities of the irreducibles in a character (throws if not a character).
std::vector<std::pair<Bipartition, std::int64_t>> decompose(const ClassFunction& chi, int n);
Bipartition identify(const ClassFunction& chi, int n);  // throws unless irreducible

// Submodule of a cell module generated by the seeds, and characters of modules.
Subspace generated_submodule(const CellModule& m, const std::vector<QVector>& seeds);
ClassFunction module_character(const CellModule& m);
ClassFunction module_character(const CellModule& m, const Subspace& sub);

}  // namespace domino
