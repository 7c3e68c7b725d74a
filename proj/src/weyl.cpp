#include "domino/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace domino {

SignedPermutation::SignedPermutation(std::vector<int> images) : w_(std::move(images)) {
    const int n = rank();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : w_) {
        int a = std::abs(x);
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
            throw std::invalid_argument("not a signed permutation: " + str());
        seen[static_cast<std::size_t>(a)] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::generator(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
    auto w = identity(n).w_;
    if (i == 1)
        w[0] = -1;
    else
        std::swap(w[static_cast<std::size_t>(i - 2)], w[static_cast<std::size_t>(i - 1)]);
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    std::vector<int> w;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t used = 0;
        try {
            w.push_back(std::stoi(item.substr(b), &used));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed signed permutation '" + std::string(text) + "'");
        }
        if (item.find_first_not_of(" \t", b + used) != std::string::npos)
            throw std::invalid_argument("malformed signed permutation '" + std::string(text) + "'");
    }
    return SignedPermutation(std::move(w));
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (w_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

std::string SignedPermutation::str() const {
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w_[i]);
    }
    return s;
}

SignedPermutation multiply(const SignedPermutation& u, const SignedPermutation& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch");
    std::vector<int> r;
    r.reserve(static_cast<std::size_t>(u.rank()));
    for (int x : v.images()) r.push_back(x > 0 ? u(x) : -u(-x));
    return SignedPermutation(std::move(r));
}

SignedPermutation inverse(const SignedPermutation& u) {
    std::vector<int> r(static_cast<std::size_t>(u.rank()));
    for (int i = 1; i <= u.rank(); ++i) {
        int x = u(i);
        r[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? i : -i;
    }
    return SignedPermutation(std::move(r));
}

SignedPermutation left_mul_generator(int i, const SignedPermutation& w) {
    return multiply(SignedPermutation::generator(w.rank(), i), w);
}

SignedPermutation right_mul_generator(const SignedPermutation& w, int i) {
    return multiply(w, SignedPermutation::generator(w.rank(), i));
}

int length(const SignedPermutation& w) {
    const auto& a = w.images();
    const int n = w.rank();
    int len = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] < 0) ++len;
        for (int j = i + 1; j < n; ++j) {
            if (a[i] > a[j]) ++len;
            if (-a[i] > a[j]) ++len;
        }
    }
    return len;
}

bool is_descent(const SignedPermutation& w, int i, Side side) {
    // Right descents read positions, left descents read values (via the inverse).
    const std::vector<int> a = side == Side::Right ? w.images() : inverse(w).images();
    if (i == 1) return a[0] < 0;
    return a[static_cast<std::size_t>(i - 2)] > a[static_cast<std::size_t>(i - 1)];
}

std::vector<int> descents(const SignedPermutation& w, Side side) {
    std::vector<int> d;
    for (int i = 1; i <= w.rank(); ++i)
        if (is_descent(w, i, side)) d.push_back(i);
    return d;
}

std::uint32_t descent_mask(const SignedPermutation& w, Side side) {
    std::uint32_t m = 0;
    for (int i : descents(w, side)) m |= 1u << (i - 1);
    return m;
}

std::vector<int> reduced_word(const SignedPermutation& w) {
    std::vector<int> word;
    SignedPermutation cur = w;
    while (!cur.is_identity()) {
        int s = descents(cur, Side::Left).front();
        word.push_back(s);
        cur = left_mul_generator(s, cur);
    }
    return word;
}

SignedPermutation from_word(int n, const std::vector<int>& word) {
    SignedPermutation w = SignedPermutation::identity(n);
    for (int s : word) w = right_mul_generator(w, s);
    return w;
}

std::vector<SignedPermutation> reflections(int n) {
    std::vector<SignedPermutation> out;
    auto id = SignedPermutation::identity(n).images();
    for (int i = 1; i <= n; ++i) {
        auto w = id;
        w[static_cast<std::size_t>(i - 1)] = -i;
        out.emplace_back(w);
        for (int j = i + 1; j <= n; ++j) {
            auto t = id;
            t[static_cast<std::size_t>(i - 1)] = j;
            t[static_cast<std::size_t>(j - 1)] = i;
            out.emplace_back(t);
            t[static_cast<std::size_t>(i - 1)] = -j;
            t[static_cast<std::size_t>(j - 1)] = -i;
            out.emplace_back(t);
        }
    }
    return out;
}

bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch");
    const int lu = length(u);
    const auto refl = reflections(u.rank());
    // Walk down covering relations from v, level by level.
    std::set<SignedPermutation> level{v};
    for (int l = length(v); l > lu; --l) {
        std::set<SignedPermutation> next;
        for (const auto& x : level)
            for (const auto& t : refl) {
                auto y = multiply(x, t);
                if (length(y) == l - 1) next.insert(y);
            }
        level = std::move(next);
        if (level.empty()) return false;
    }
    return level.count(u) > 0;
}

std::vector<SignedPermutation> enumerate_group(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            auto w = p;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
            out.emplace_back(w);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end());
    return out;
}

SignedPermutation longest_element(int n) {
    std::vector<int> w;
    for (int i = 1; i <= n; ++i) w.push_back(-i);
    return SignedPermutation(w);
}

SignedCycleType signed_cycle_type(const SignedPermutation& w) {
    const int n = w.rank();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> pos, neg;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int j = i, len = 0, sign = 1;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
            int x = w(j);
            if (x < 0) sign = -sign;
            j = std::abs(x);
        } while (j != i);
        (sign > 0 ? pos : neg).push_back(len);
    }
    std::sort(pos.rbegin(), pos.rend());
    std::sort(neg.rbegin(), neg.rend());
    return {Shape(pos), Shape(neg)};
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
    std::map<SignedCycleType, ConjugacyClass> by_type;
    for (const auto& w : enumerate_group(n)) {
        auto t = signed_cycle_type(w);
        auto it = by_type.find(t);
        if (it == by_type.end()) it = by_type.emplace(t, ConjugacyClass{t, w, 0}).first;
        it->second.size++;
    }
    std::vector<ConjugacyClass> out;
    for (auto& [t, c] : by_type) out.push_back(c);
    return out;
}

}  // namespace domino
