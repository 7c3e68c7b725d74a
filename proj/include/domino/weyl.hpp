#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "domino/shape.hpp"

namespace domino {

// w(1..n); w(i) = -j means i is sent to -j.  Generator s_1 negates position 1,
// s_i (i >= 2) swaps positions i-1 and i.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> images);  // throws unless a signed permutation

    static SignedPermutation identity(int n);
    static SignedPermutation generator(int n, int i);
    static SignedPermutation parse(std::string_view text);  // "3,-1,2"

    int rank() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return w_; }
    bool is_identity() const;
    std::string str() const;

    auto operator<=>(const SignedPermutation&) const = default;

private:
    std::vector<int> w_;
};

enum class Side { Left, Right };

SignedPermutation multiply(const SignedPermutation& u, const SignedPermutation& v);  // (uv)(i) = u(v(i))
SignedPermutation inverse(const SignedPermutation& u);
SignedPermutation left_mul_generator(int i, const SignedPermutation& w);   // s_i w
SignedPermutation right_mul_generator(const SignedPermutation& w, int i);  // w s_i

int length(const SignedPermutation& w);
bool is_descent(const SignedPermutation& w, int i, Side side);
std::vector<int> descents(const SignedPermutation& w, Side side);  // ascending indices
std::uint32_t descent_mask(const SignedPermutation& w, Side side);  // bit i-1 set for s_i

std::vector<int> reduced_word(const SignedPermutation& w);  // w = s_{a1} s_{a2} ... s_{ak}
SignedPermutation from_word(int n, const std::vector<int>& word);

// All n^2 reflections (sign changes, transpositions (i j) and (i -j)).
std::vector<SignedPermutation> reflections(int n);
bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& v);

std::vector<SignedPermutation> enumerate_group(int n);  // lexicographic in the images
SignedPermutation longest_element(int n);

struct SignedCycleType {
    Shape positive;
    Shape negative;
    auto operator<=>(const SignedCycleType&) const = default;
    std::string str() const { return "(" + positive.str() + ";" + negative.str() + ")"; }
};

struct ConjugacyClass {
    SignedCycleType type;
    SignedPermutation representative;  // first element of the class in enumeration order
    std::int64_t size = 0;
};

SignedCycleType signed_cycle_type(const SignedPermutation& w);
std::vector<ConjugacyClass> conjugacy_classes(int n);  // ordered by cycle type

}  // namespace domino
