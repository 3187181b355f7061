#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "vqf/errors.hpp"

namespace vqf {

/// One element of the quaternions H, q = w + x*e1 + y*e2 + z*e3.
/// Value type; all operations are pure.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    constexpr Quaternion(double real) : w(real) {}  // NOLINT: implicit real embedding is intended

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    // unit(0) = 1, unit(1..3) = e1..e3
    static constexpr Quaternion unit(int axis) {
        Quaternion q;
        switch (axis) {
            case 0: q.w = 1.0; break;
            case 1: q.x = 1.0; break;
            case 2: q.y = 1.0; break;
            case 3: q.z = 1.0; break;
            default: break;
        }
        return q;
    }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr Quaternion vec() const { return {0.0, x, y, z}; }
    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }

    friend constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }

    // Cayley table: e1*e2 = e3, e2*e3 = e1, e3*e1 = e2, e_u^2 = -1.
    friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
    }
    friend constexpr Quaternion operator*(double a, const Quaternion& q) {
        return {a * q.w, a * q.x, a * q.y, a * q.z};
    }
    friend constexpr Quaternion operator*(const Quaternion& q, double a) { return a * q; }
    friend constexpr Quaternion operator/(const Quaternion& q, double a) {
        return {q.w / a, q.x / a, q.y / a, q.z / a};
    }

    Quaternion& operator+=(const Quaternion& q) { return *this = *this + q; }
    Quaternion& operator-=(const Quaternion& q) { return *this = *this - q; }
    Quaternion& operator*=(const Quaternion& q) { return *this = *this * q; }

    friend constexpr bool operator==(const Quaternion& p, const Quaternion& q) {
        return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
    }

    /// conj(q)/|q|^2. Throws ZeroDivisor when |q| < eps_scale * (1 + |q|).
    Quaternion inverse(double eps_scale = 1e-14) const {
        const double n = norm();
        if (n < eps_scale * (1.0 + n)) {
            throw ZeroDivisor("quaternion inverse: modulus below epsilon");
        }
        return conj() / norm_sq();
    }

    Quaternion pow(int n) const {
        Quaternion r = one();
        Quaternion base = *this;
        int k = n;
        if (k < 0) {
            base = inverse();
            k = -k;
        }
        for (int i = 0; i < k; ++i) r = r * base;
        return r;
    }
};

inline double abs_dist(const Quaternion& p, const Quaternion& q) { return (p - q).norm(); }

/// Permutation-averaged product (1/n!) sum_sigma q_{sigma(1)} ... q_{sigma(n)}.
/// Enumerates all n! orderings; refuses n > 8.
Quaternion symmetric_product(std::span<const Quaternion> qs);
inline Quaternion symmetric_product(const std::vector<Quaternion>& qs) {
    return symmetric_product(std::span<const Quaternion>(qs));
}

}  // namespace vqf
