#include "vqf/multiindex.hpp"

namespace vqf {

std::uint64_t multinomial(const MultiIndex& a) {
    // (|a| choose a1) * (|a|-a1 choose a2), kept in integers throughout
    auto binom = [](int n, int k) {
        std::uint64_t r = 1;
        for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
        return r;
    };
    const int n = a.degree();
    return binom(n, a.a1) * binom(n - a.a1, a.a2);
}

double multinomial_d(const MultiIndex& a) {
    double r = 1.0;
    int n = 0;
    for (int u = 1; u <= 3; ++u)
        for (int i = 1; i <= a[u]; ++i) {
            ++n;
            r *= static_cast<double>(n) / static_cast<double>(i);
        }
    return r;
}

std::vector<MultiIndex> indices_of_degree(int n) {
    std::vector<MultiIndex> out;
    out.reserve(static_cast<size_t>((n + 1) * (n + 2) / 2));
    for (int a1 = 0; a1 <= n; ++a1)
        for (int a2 = 0; a2 <= n - a1; ++a2) out.push_back({a1, a2, n - a1 - a2});
    return out;
}

std::vector<MultiIndex> indices_up_to_degree(int n) {
    std::vector<MultiIndex> out;
    for (int d = 0; d <= n; ++d)
        for (const auto& a : indices_of_degree(d)) out.push_back(a);
    return out;
}

}  // namespace vqf
