#pragma once

#include <cmath>

#include "vqf/errors.hpp"
#include "vqf/multiindex.hpp"
#include "vqf/quat.hpp"

namespace vqf {

/// A point of R^4 viewed as the quaternion q = x0 + x1 e1 + x2 e2 + x3 e3.
struct PointH {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr PointH() = default;
    constexpr PointH(double x0_, double x1_, double x2_, double x3_)
        : x0(x0_), x1(x1_), x2(x2_), x3(x3_) {}

    constexpr double coord(int i) const {
        switch (i) {
            case 0: return x0;
            case 1: return x1;
            case 2: return x2;
            default: return x3;
        }
    }
    constexpr PointH with_coord(int i, double v) const {
        PointH p = *this;
        switch (i) {
            case 0: p.x0 = v; break;
            case 1: p.x1 = v; break;
            case 2: p.x2 = v; break;
            default: p.x3 = v; break;
        }
        return p;
    }

    constexpr Quaternion quaternion() const { return {x0, x1, x2, x3}; }
    constexpr Quaternion vec() const { return {0.0, x1, x2, x3}; }
    constexpr double vec_norm_sq() const { return x1 * x1 + x2 * x2 + x3 * x3; }
    double vec_norm() const { return std::sqrt(vec_norm_sq()); }
    constexpr double norm_sq() const { return x0 * x0 + vec_norm_sq(); }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr bool in_hstar() const { return vec_norm_sq() > 0.0; }

    /// Construction that enforces membership in H* = {q : vec(q) != 0}.
    static PointH strict(double x0, double x1, double x2, double x3) {
        PointH p{x0, x1, x2, x3};
        if (!p.in_hstar()) throw SingularVectorPart("point has zero vector part");
        return p;
    }

    friend constexpr PointH operator-(const PointH& a, const PointH& b) {
        return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
    }
    friend constexpr PointH operator+(const PointH& a, const PointH& b) {
        return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend constexpr PointH operator*(double t, const PointH& a) {
        return {t * a.x0, t * a.x1, t * a.x2, t * a.x3};
    }
    friend constexpr bool operator==(const PointH& a, const PointH& b) {
        return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
    }
};

/// x^alpha = x1^a1 x2^a2 x3^a3 (does not involve x0).
inline double x_pow_alpha(const PointH& x, const MultiIndex& alpha) {
    double r = 1.0;
    for (int i = 0; i < alpha.a1; ++i) r *= x.x1;
    for (int i = 0; i < alpha.a2; ++i) r *= x.x2;
    for (int i = 0; i < alpha.a3; ++i) r *= x.x3;
    return r;
}

}  // namespace vqf
