#pragma once

#include <array>
#include <map>
#include <random>

#include "vqf/operators.hpp"
#include "vqf/point.hpp"
#include "vqf/quat.hpp"
#include "vqf/sampling.hpp"

namespace vqf::testing {

inline bool close(const Quaternion& a, const Quaternion& b, double tol) {
    return (a - b).norm() <= tol;
}

/// Quaternion with small integer components; arithmetic on these is exact in
/// doubles, which lets identity tests assert bitwise equality.
inline Quaternion random_int_quaternion(std::mt19937_64& rng, int range = 3) {
    auto pick = [&] { return static_cast<double>(static_cast<int>(rng() % (2 * range + 1))) - range; };
    return {pick(), pick(), pick(), pick()};
}

/// Sparse polynomial in (x0, x1, x2, x3) with quaternion coefficients on the
/// right; supports exact partial derivatives. Test-only scaffolding for the
/// operator identities.
struct Poly4 {
    std::map<std::array<int, 4>, Quaternion> terms;

    Quaternion eval(const PointH& p) const {
        Quaternion s = Quaternion::zero();
        for (const auto& [e, c] : terms) {
            double mono = 1.0;
            for (int axis = 0; axis < 4; ++axis)
                for (int k = 0; k < e[axis]; ++k) mono *= p.coord(axis);
            s += mono * c;
        }
        return s;
    }

    Poly4 partial(int axis) const {
        Poly4 out;
        for (const auto& [e, c] : terms) {
            if (e[axis] == 0) continue;
            auto e2 = e;
            e2[axis] -= 1;
            auto it = out.terms.find(e2);
            const Quaternion add = static_cast<double>(e[axis]) * c;
            if (it == out.terms.end()) out.terms[e2] = add;
            else it->second += add;
        }
        return out;
    }

    Field field() const {
        return Field{[p = *this](const PointH& x) { return p.eval(x); }};
    }

    static Poly4 random(std::mt19937_64& rng, int max_deg, int nterms) {
        Poly4 p;
        for (int i = 0; i < nterms; ++i) {
            std::array<int, 4> e{};
            int budget = max_deg;
            for (int axis = 0; axis < 4; ++axis) {
                e[axis] = static_cast<int>(rng() % (budget + 1));
                budget -= e[axis];
            }
            p.terms[e] = random_quaternion(rng);
        }
        return p;
    }
};

}  // namespace vqf::testing
