#pragma once

#include <cstdint>
#include <random>

#include "vqf/point.hpp"
#include "vqf/qmatrix.hpp"
#include "vqf/quat.hpp"

namespace vqf {

/// Seeded generators used by the verification suites and tests. Raw engine
/// output is mapped to doubles directly so results do not depend on the
/// standard library's distribution implementations.
double uniform01(std::mt19937_64& rng);
double uniform(std::mt19937_64& rng, double lo, double hi);

/// Uniform in [-1, 1]^4 with samples rejected while |vec| <= vec_min.
PointH random_point_hstar(std::mt19937_64& rng, double vec_min = 0.05);

/// Uniform in [-1, 1]^4 conditioned on |q| < qmax and |vec| > vec_min.
PointH random_point_ball(std::mt19937_64& rng, double qmax, double vec_min = 0.05);

Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0);
QMatrix random_qmatrix(std::mt19937_64& rng, int rows, int cols, double scale = 1.0);

}  // namespace vqf
