#include "vqf/sampling.hpp"

namespace vqf {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

PointH random_point_hstar(std::mt19937_64& rng, double vec_min) {
    for (;;) {
        const PointH p{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1),
                       uniform(rng, -1, 1)};
        if (p.vec_norm_sq() > vec_min * vec_min) return p;
    }
}

PointH random_point_ball(std::mt19937_64& rng, double qmax, double vec_min) {
    for (;;) {
        const PointH p = random_point_hstar(rng, vec_min);
        if (p.norm() < qmax) return p;
    }
}

Quaternion random_quaternion(std::mt19937_64& rng, double scale) {
    return {uniform(rng, -scale, scale), uniform(rng, -scale, scale),
            uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

QMatrix random_qmatrix(std::mt19937_64& rng, int rows, int cols, double scale) {
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_quaternion(rng, scale);
    return m;
}

}  // namespace vqf
