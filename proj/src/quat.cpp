#include "vqf/quat.hpp"

#include <algorithm>
#include <numeric>

#include "vqf/multiindex.hpp"

namespace vqf {

Quaternion symmetric_product(std::span<const Quaternion> qs) {
    const size_t n = qs.size();
    if (n == 0) throw Error("symmetric_product: empty input");
    if (n > 8) throw DegreeCap("symmetric_product: more than 8 factors");
    if (n == 1) return qs[0];

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Quaternion sum = Quaternion::zero();
    do {
        Quaternion p = qs[perm[0]];
        for (size_t i = 1; i < n; ++i) p = p * qs[perm[i]];
        sum += p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum / static_cast<double>(factorial_u64(static_cast<int>(n)));
}

}  // namespace vqf
