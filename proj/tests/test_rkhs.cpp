#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "vqf/rkhs.hpp"
#include "vqf/sampling.hpp"

using namespace vqf;
using vqf::testing::close;

namespace {

FueterSeries monomial(const MultiIndex& a) {
    FueterSeries f(1, 1);
    f.add(a, QMatrix::scalar(Quaternion::one()));
    return f;
}

}  // namespace

TEST_CASE("arveson weights") {
    const auto c = CoefficientFamily::arveson();
    CHECK(c.at(MultiIndex{}) == Rational(1));
    CHECK(c.at(MultiIndex{1, 0, 0}) == Rational(1));
    CHECK(c.at(MultiIndex{1, 1, 0}) == Rational(1, 2));
    CHECK(c.at(MultiIndex{2, 1, 0}) == Rational(2, 6));
    CHECK(c.contains(MultiIndex{7, 3, 2}));
}

TEST_CASE("custom families") {
    std::map<MultiIndex, Rational> values;
    values[MultiIndex{1, 0, 0}] = Rational(1);
    values[MultiIndex{0, 1, 0}] = Rational(2, 3);
    const auto c = CoefficientFamily::custom(values);
    CHECK(c.at(MultiIndex{0, 1, 0}) == Rational(2, 3));
    CHECK(!c.contains(MultiIndex{}));
    CHECK_THROWS_AS(c.at(MultiIndex{}), Error);

    std::map<MultiIndex, Rational> bad;
    bad[MultiIndex{}] = Rational(0);
    CHECK_THROWS_AS(CoefficientFamily::custom(bad), Error);
}

TEST_CASE("kernel evaluation") {
    const auto c = CoefficientFamily::arveson();
    const PointH x{0.1, 0.4, -0.2, 0.3};
    const PointH y{-0.2, 0.1, 0.5, 0.2};

    CHECK(kernel_eval(c, x, y, 0).value == Quaternion::one());

    // hermitian symmetry of the defining sum
    const Quaternion kxy = kernel_eval(c, x, y, 15).value;
    const Quaternion kyx = kernel_eval(c, y, x, 15).value;
    CHECK(close(kxy, kyx.conj(), 1e-14));

    // diagonal closed form within the reported tail
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        const PointH p = random_point_ball(rng, 0.8, 0.05);
        const KernelValue kv = kernel_eval(c, p, p, 40);
        REQUIRE(kv.tail_valid);
        const double closed = 1.0 / (1.0 - p.norm_sq());
        CHECK(std::abs(kv.value.w - closed) <= kv.tail_bound + 1e-10);
        CHECK(std::abs(kv.value.x) <= 1e-13);
    }

    CHECK_THROWS_AS(kernel_eval(c, PointH{1, 0, 0, 0}, y, 5), SingularVectorPart);
}

TEST_CASE("gram matrices") {
    const auto c = CoefficientFamily::arveson();

    const QMatrix single = gram_matrix(c, {PointH{0, 0.5, 0, 0}}, 20);
    CHECK(single.rows() == 1);
    CHECK(single.at(0, 0).w > 0);
    CHECK(std::abs(single.at(0, 0).x) == 0.0);

    std::mt19937_64 rng(62);
    std::vector<PointH> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(random_point_ball(rng, 0.7, 0.05));
    const QMatrix g = gram_matrix(c, pts, 30);
    CHECK(is_psd(g, 1e-8));

    // a duplicated point forces rank deficiency but not indefiniteness
    pts.push_back(pts.front());
    const QMatrix g2 = gram_matrix(c, pts, 30);
    const auto eig = hermitian_eigenvalues(g2);
    CHECK(eig.front() >= -1e-8);
    CHECK(eig.front() <= 1e-8);
}

TEST_CASE("shift operators") {
    const FueterSeries m100 = monomial(MultiIndex{1, 0, 0});
    CHECK(shift(1, m100) == monomial(MultiIndex{2, 0, 0}));
    CHECK(shift(2, FueterSeries(1, 1)).empty());

    CHECK(backward_shift(1, monomial(MultiIndex{2, 1, 0})).coeff(MultiIndex{1, 1, 0}) ==
          QMatrix::scalar(Quaternion(2.0 / 3.0)));
    CHECK(backward_shift(2, m100).empty());
    CHECK(backward_shift(1, monomial(MultiIndex{})).empty());

    // sum_u M_u B_u acts as the identity away from constants
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 10; ++trial) {
        FueterSeries f(1, 1);
        for (const auto& a : indices_up_to_degree(5))
            if (a.degree() >= 1 && uniform01(rng) < 0.4)
                f.add(a, QMatrix::scalar(random_quaternion(rng)));
        FueterSeries resolved(1, 1);
        for (int u = 1; u <= 3; ++u) resolved = resolved + shift(u, backward_shift(u, f));
        CHECK(coeff_distance(resolved, f) <= 1e-14);
    }

    CHECK_THROWS_AS(shift(1, FueterSeries(2, 1)), ShapeMismatch);
}

TEST_CASE("shift adjoint") {
    const auto arveson = CoefficientFamily::arveson();
    CHECK(shift_adjoint(1, arveson, monomial(MultiIndex{1, 0, 0})) == monomial(MultiIndex{}));
    CHECK(shift_adjoint(1, arveson, monomial(MultiIndex{1, 1, 0}))
              .coeff(MultiIndex{0, 1, 0}) == QMatrix::scalar(Quaternion(0.5)));
    CHECK(shift_adjoint(2, arveson, monomial(MultiIndex{})).empty());

    // in the arveson family the adjoint is the backward shift, term for term
    for (const auto& a : indices_up_to_degree(8)) {
        if (a.degree() == 0) continue;
        for (int u = 1; u <= 3; ++u) {
            if (a[u] == 0) continue;
            const Rational ratio = arveson.at(a) / arveson.at(a.minus(u));
            CHECK(ratio == Rational(a[u], a.degree()));
            const FueterSeries lhs = shift_adjoint(u, arveson, monomial(a));
            const FueterSeries rhs = backward_shift(u, monomial(a));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("adjoint relation at the coefficient level") {
    const auto arveson = CoefficientFamily::arveson();
    std::map<MultiIndex, Rational> table;
    for (const auto& a : indices_up_to_degree(7)) table[a] = Rational(2 + a.degree(), 3);
    const auto custom = CoefficientFamily::custom(table);

    for (const auto* fam : {&arveson, &custom}) {
        for (const auto& alpha : indices_up_to_degree(5)) {
            for (int u = 1; u <= 3; ++u) {
                const MultiIndex beta = alpha.plus(u);
                // <M_u mu^a, mu^b> = c_{a+e_u} [a+e_u = b]
                // <mu^a, M_u^* mu^b> = (c_b / c_{b - e_u}) c_a [a = b - e_u]
                const Rational lhs = fam->at(beta);
                const Rational rhs = fam->at(beta) / fam->at(alpha) * fam->at(alpha);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("structural defect") {
    const auto arveson = CoefficientFamily::arveson();
    for (int d = 1; d <= 10; ++d)
        for (const auto& a : indices_of_degree(d)) CHECK(structural_defect(arveson, a) == 0);

    CHECK(structural_defect(arveson, MultiIndex{1, 1, 0}) == Rational(0));

    std::map<MultiIndex, Rational> ones;
    for (const auto& a : indices_up_to_degree(3)) ones[a] = Rational(1);
    const auto flat = CoefficientFamily::custom(ones);
    CHECK(structural_defect(flat, MultiIndex{1, 1, 0}) == Rational(-1));

    CHECK_THROWS_AS(structural_defect(arveson, MultiIndex{}), Error);
}

TEST_CASE("omega_A membership") {
    CHECK(in_omega_arveson(PointH{0.1, 0.3, 0.2, 0.1}));
    CHECK(!in_omega_arveson(PointH{0.9, 0.5, 0, 0}));
    CHECK(!in_omega_arveson(PointH{0.3, 0, 0, 0}));  // not in H*
}

TEST_CASE("multiplier kernel gram") {
    std::mt19937_64 rng(64);
    std::vector<PointH> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(random_point_ball(rng, 0.6, 0.1));

    // zero multiplier: the kernel collapses to the diagonal kernel
    const FueterSeries zero(1, 1);
    const QMatrix g0 = multiplier_kernel_gram(zero, pts, 20);
    const QMatrix plain = gram_matrix(CoefficientFamily::arveson(), pts, 20);
    CHECK((g0 - plain).frobenius_norm() <= 1e-11);

    // contractive constant multiplier stays PSD, expansive fails already on
    // the diagonal
    const FueterSeries half = FueterSeries::constant(QMatrix::scalar(Quaternion(0.5)));
    CHECK(is_psd(multiplier_kernel_gram(half, pts, 20), 1e-9));
    const QMatrix ghalf = multiplier_kernel_gram(half, pts, 20);
    CHECK((ghalf - 0.75 * plain).frobenius_norm() <= 1e-11);

    const FueterSeries two = FueterSeries::constant(QMatrix::scalar(Quaternion(2.0)));
    const QMatrix g2 = multiplier_kernel_gram(two, {pts[0]}, 20);
    CHECK(g2.at(0, 0).w < 0);
    CHECK(!is_psd(g2, 1e-9));

    CHECK_THROWS_AS(multiplier_kernel_gram(zero, {PointH{1, 0, 0, 0}}, 5),
                    SingularVectorPart);
}
