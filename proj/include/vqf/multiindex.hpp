#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vqf/errors.hpp"

namespace vqf {

/// alpha in N_0^3, indexing the monomials mu^alpha and x^alpha.
struct MultiIndex {
    int a1 = 0;
    int a2 = 0;
    int a3 = 0;

    constexpr MultiIndex() = default;
    constexpr MultiIndex(int a1_, int a2_, int a3_) : a1(a1_), a2(a2_), a3(a3_) {}

    constexpr int degree() const { return a1 + a2 + a3; }
    constexpr int operator[](int u) const { return u == 1 ? a1 : (u == 2 ? a2 : a3); }

    static constexpr MultiIndex unit(int u) {
        return {u == 1 ? 1 : 0, u == 2 ? 1 : 0, u == 3 ? 1 : 0};
    }

    constexpr MultiIndex plus(int u) const {
        return {a1 + (u == 1), a2 + (u == 2), a3 + (u == 3)};
    }
    /// alpha - e_u; caller must ensure alpha_u > 0.
    constexpr MultiIndex minus(int u) const {
        return {a1 - (u == 1), a2 - (u == 2), a3 - (u == 3)};
    }

    friend constexpr MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        return {a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
    }
    friend constexpr bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3;
    }
    // Graded lexicographic: by |alpha|, then (a1, a2, a3). This is the canonical
    // term order used for serialization.
    friend constexpr bool operator<(const MultiIndex& a, const MultiIndex& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.a1 != b.a1) return a.a1 < b.a1;
        if (a.a2 != b.a2) return a.a2 < b.a2;
        return a.a3 < b.a3;
    }
};

constexpr std::uint64_t factorial_u64(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

/// alpha! = a1! a2! a3!
constexpr std::uint64_t multi_factorial(const MultiIndex& a) {
    return factorial_u64(a.a1) * factorial_u64(a.a2) * factorial_u64(a.a3);
}

/// |alpha|! / alpha!  (an integer; exact in uint64 up to |alpha| = 40)
std::uint64_t multinomial(const MultiIndex& a);

/// Same weight in double arithmetic; exact below 2^53, safe for any degree.
double multinomial_d(const MultiIndex& a);

/// All alpha with |alpha| = n, in canonical (graded-lex) order.
std::vector<MultiIndex> indices_of_degree(int n);

/// All alpha with |alpha| <= n, in canonical order.
std::vector<MultiIndex> indices_up_to_degree(int n);

}  // namespace vqf
