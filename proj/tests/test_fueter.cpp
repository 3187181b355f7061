#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "vqf/fueter.hpp"
#include "vqf/sampling.hpp"

using namespace vqf;
using vqf::testing::close;

TEST_CASE("mu_u basics") {
    // x0 = 0 collapses to the real coordinate
    const PointH p0{0, 0.3, -0.7, 1.1};
    for (int u = 1; u <= 3; ++u) CHECK(mu_u(p0, u) == Quaternion(p0.coord(u)));

    CHECK(close(mu_u(PointH{1, 1, 0, 0}, 1), Quaternion(1, -1, 0, 0), 0.0));

    CHECK_THROWS_AS(mu_u(PointH{1, 0, 0, 0}, 1), SingularVectorPart);
    CHECK_THROWS_AS(mu_u(PointH{0, 1, 0, 0}, 4), Error);

    CHECK_THROWS_AS(PointH::strict(2, 0, 0, 0), SingularVectorPart);
    CHECK(PointH::strict(2, 1, 0, 0).in_hstar());
}

TEST_CASE("modulus of mu_u and comparison with zeta_u") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const PointH x = random_point_hstar(rng, 0.05);
        for (int u = 1; u <= 3; ++u) {
            const double m2 = mu_u(x, u).norm_sq();
            const double expect =
                x.coord(u) * x.coord(u) * (1.0 + x.x0 * x.x0 / x.vec_norm_sq());
            CHECK(std::abs(m2 - expect) <= 1e-12 * std::max(1.0, expect));
            CHECK(m2 <= zeta_u(x, u).norm_sq() + 1e-14);
        }
    }
}

TEST_CASE("mu values commute and the two mu^alpha routes agree") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        const PointH x = random_point_hstar(rng, 0.05);
        for (int u = 1; u <= 3; ++u)
            for (int v = u + 1; v <= 3; ++v) {
                const Quaternion a = mu_u(x, u);
                const Quaternion b = mu_u(x, v);
                CHECK(close(a * b, b * a, 1e-12));
            }
    }
    for (int i = 0; i < 50; ++i) {
        const PointH x = random_point_hstar(rng, 0.05);
        for (const auto& alpha : indices_up_to_degree(6))
            CHECK(close(mu_alpha(x, alpha), mu_alpha_product(x, alpha), 1e-12));
    }
}

TEST_CASE("mu^alpha special values and modulus") {
    std::mt19937_64 rng(33);
    CHECK(mu_alpha(PointH{2, 1, 1, 1}, MultiIndex{}) == Quaternion::one());

    for (int i = 0; i < 20; ++i) {
        PointH x = random_point_hstar(rng, 0.05);
        x.x0 = 0.0;
        for (const auto& alpha : indices_up_to_degree(5))
            CHECK(mu_alpha(x, alpha) == Quaternion(x_pow_alpha(x, alpha)));
    }

    for (int i = 0; i < 50; ++i) {
        const PointH x = random_point_hstar(rng, 0.05);
        for (const auto& alpha : indices_up_to_degree(5)) {
            const double m2 = mu_alpha(x, alpha).norm_sq();
            const double xa = x_pow_alpha(x, alpha);
            const double expect =
                xa * xa * std::pow(1.0 + x.x0 * x.x0 / x.vec_norm_sq(), alpha.degree());
            CHECK(std::abs(m2 - expect) <= 1e-12 * std::max(1.0, expect));
        }
    }
}

TEST_CASE("classical zeta") {
    PointH x{0, 0.4, 0.5, -0.2};
    for (const auto& alpha : indices_up_to_degree(4))
        CHECK(close(zeta_alpha(x, alpha), Quaternion(x_pow_alpha(x, alpha)), 1e-15));

    CHECK(zeta_alpha(PointH{1, 2, 0, 0}, MultiIndex{1, 0, 0}) == Quaternion(2, -1, 0, 0));

    const PointH y{1, 1, 1, 0};
    const Quaternion expected =
        symmetric_product(std::vector<Quaternion>{Quaternion(1, -1, 0, 0), Quaternion(1, 0, -1, 0)});
    CHECK(close(zeta_alpha(y, MultiIndex{1, 1, 0}), expected, 0.0));

    CHECK_THROWS_AS(zeta_alpha(y, MultiIndex{9, 0, 0}), DegreeCap);
}

TEST_CASE("expansion coefficients c_{alpha,n}") {
    CHECK(c_alpha_n(MultiIndex{1, 0, 0}, 1) == Quaternion::unit(1));
    CHECK(c_alpha_n(MultiIndex{2, 0, 0}, 2) == Quaternion(-1.0));
    CHECK(c_alpha_n(MultiIndex{1, 1, 0}, 2) == Quaternion::zero());
    CHECK_THROWS_AS(c_alpha_n(MultiIndex{1, 1, 0}, 3), DegreeMismatch);
    CHECK_THROWS_AS(c_alpha_n(MultiIndex{9, 0, 0}, 9), DegreeCap);

    // single even entry gives a real coefficient, exactly
    for (int k = 1; k <= 4; ++k) {
        const Quaternion c = c_alpha_n(MultiIndex{2 * k, 0, 0}, 2 * k);
        CHECK(c.x == 0.0);
        CHECK(c.y == 0.0);
        CHECK(c.z == 0.0);
        CHECK(c.w == (k % 2 == 0 ? 1.0 : -1.0));
    }
}

TEST_CASE("q^n expansion in the monomial basis") {
    const FueterSeries s0 = expand_qn(0);
    CHECK(s0.terms().size() == 1);
    CHECK(s0.coeff(MultiIndex{}) == QMatrix::identity(1));

    CHECK(close(eval(expand_qn(2), PointH{0, 1, 1, 0}).at(0, 0), Quaternion(-2.0), 1e-14));
    CHECK(close(eval(expand_qn(3), PointH{1, 1, 0, 0}).at(0, 0), Quaternion(-2, 2, 0, 0),
                1e-14));

    std::mt19937_64 rng(34);
    for (int n = 0; n <= 6; ++n) {
        const FueterSeries s = expand_qn(n);
        for (int i = 0; i < 10; ++i) {
            const PointH x = random_point_hstar(rng, 0.05);
            const Quaternion direct = x.quaternion().pow(n);
            CHECK(close(eval(s, x).at(0, 0), direct, 1e-10 * std::max(1.0, direct.norm())));
        }
    }

    CHECK_THROWS_AS(expand_qn(9), DegreeCap);
}

TEST_CASE("omega_{r,R,rho} and the growth bound") {
    CHECK(in_omega_rRrho(PointH{0, 1, 1, 1}, 0.5, 2, 1));
    CHECK(!in_omega_rRrho(PointH{0, 0.1, 1, 1}, 0.5, 2, 1));
    CHECK(!in_omega_rRrho(PointH{1.5, 1, 1, 1}, 0.5, 2, 1));
    CHECK_THROWS_AS(in_omega_rRrho(PointH{0, 1, 1, 1}, 2, 0.5, 1), BadBounds);

    const double r = 0.5, R = 2.0, rho = 1.0;
    const double L = omega_growth_bound(r, R, rho);
    std::mt19937_64 rng(35);
    for (int i = 0; i < 100; ++i) {
        PointH x;
        x.x0 = uniform(rng, -rho, rho);
        x.x1 = uniform(rng, r, R) * (uniform01(rng) < 0.5 ? -1 : 1);
        x.x2 = uniform(rng, r, R) * (uniform01(rng) < 0.5 ? -1 : 1);
        x.x3 = uniform(rng, r, R) * (uniform01(rng) < 0.5 ? -1 : 1);
        REQUIRE(in_omega_rRrho(x, r, R, rho));
        for (const auto& alpha : indices_up_to_degree(6))
            CHECK(mu_alpha(x, alpha).norm() <= std::pow(L, alpha.degree()) + 1e-12);
    }
}

TEST_CASE("omega_1 membership") {
    const PointH inside{0, 0.5, 0, 0.1};
    CHECK(std::abs(mu_sum_sq(inside) - 0.26) <= 1e-15);
    CHECK(in_omega_1(inside));
    CHECK(!in_omega_1(PointH{0, 1, 1, 0}));

    // the ellipsoid 3 x0^2 + |vec|^2 < 1 is contained in omega_1
    std::mt19937_64 rng(36);
    int found = 0;
    while (found < 100) {
        const PointH x{uniform(rng, -0.6, 0.6), uniform(rng, -1, 1), uniform(rng, -1, 1),
                       uniform(rng, -1, 1)};
        if (x.vec_norm_sq() < 1e-4) continue;
        if (3 * x.x0 * x.x0 + x.vec_norm_sq() >= 1) continue;
        CHECK(in_omega_1(x));
        ++found;
    }
}

TEST_CASE("diagonal kernel partial sums") {
    const PointH x{0, 0.5, 0, 0};
    CHECK(arveson_diag(x, 0).value == 1.0);

    const ArvesonDiag d = arveson_diag(x, 40);
    CHECK(std::abs(d.value - 4.0 / 3.0) <= 1e-9);
    CHECK(d.tail_valid);
    CHECK(std::abs(d.value - 4.0 / 3.0) <= d.tail_bound + 1e-12);

    // level increments are |q|^{2n}
    std::mt19937_64 rng(37);
    for (int i = 0; i < 20; ++i) {
        const PointH p = random_point_hstar(rng, 0.1);
        const double q2 = p.norm_sq();
        for (int n = 0; n <= 8; ++n) {
            const double level = arveson_diag_level(p, n);
            CHECK(std::abs(level - std::pow(q2, n)) <= 1e-10 * std::max(1.0, std::pow(q2, n)));
        }
    }

    // divergence outside the ball: increments grow without bound
    const PointH big{1.0, 1.0, 0.5, 0.3};
    REQUIRE(big.norm_sq() > 1.0);
    CHECK(!arveson_diag(big, 10).tail_valid);
    double prev = arveson_diag_level(big, 0);
    for (int n = 1; n <= 12; ++n) {
        const double cur = arveson_diag_level(big, n);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(prev > 1e3);
}
