#include "vqf/schur.hpp"

#include <cmath>
#include <limits>

namespace vqf {

void Realization::validate() const {
    const int NN = A.cols();
    if (A.rows() != 3 * NN) throw ShapeMismatch("realization: A must stack three N x N blocks");
    if (B.rows() != 3 * NN) throw ShapeMismatch("realization: B must stack three N x m blocks");
    if (C.cols() != NN) throw ShapeMismatch("realization: C column count must be N");
    if (D.rows() != C.rows()) throw ShapeMismatch("realization: D row count must match C");
}

QMatrix Realization::stacked() const {
    QMatrix t(3 * N() + n(), N() + m());
    t.set_block(0, 0, A);
    t.set_block(0, N(), B);
    t.set_block(3 * N(), 0, C);
    t.set_block(3 * N(), N(), D);
    return t;
}

BlaschkePoint::BlaschkePoint(const PointH& a) : a_(a) {
    if (!a.in_hstar()) throw OutsideOmega1("blaschke point: not in H*");
    mu_row_ = QMatrix(1, 3);
    for (int u = 1; u <= 3; ++u) mu_row_.at(0, u - 1) = mu_u(a, u);
    s_ = (mu_row_ * mu_row_.adjoint()).at(0, 0).w;
    if (!(s_ < 1.0)) throw OutsideOmega1("blaschke point: sum |mu_u(a)|^2 >= 1");
}

FueterSeries blaschke_series(const BlaschkePoint& a, int trunc) {
    if (trunc < 1) throw BadBounds("blaschke_series: trunc must be >= 1");
    const QMatrix& v = a.mu_row();
    const double s = a.s();

    // (1 - mu(x) mu(a)^*)^{-star}
    FueterSeries pencil(1, 1, trunc);
    pencil.add(MultiIndex{}, QMatrix::scalar(Quaternion::one()));
    for (int u = 1; u <= 3; ++u)
        pencil.add(MultiIndex::unit(u), QMatrix::scalar(-1.0 * v.at(0, u - 1).conj()));
    const FueterSeries inv = star_inverse(pencil, trunc);

    // mu(x) - mu(a)
    FueterSeries diff = FueterSeries::mu_row_series();
    diff.add(MultiIndex{}, -1.0 * v);

    const QMatrix right = rank1_spectral(v, [](double t) { return 1.0 / std::sqrt(t); });
    FueterSeries out = star_mul(inv, diff).right_mul(right);
    return out.scale_left(Quaternion(std::sqrt(1.0 - s)));
}

double blaschke_tail_estimate(double s, int trunc) {
    const double r = std::sqrt(s);
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(r, trunc + 1) / (1.0 - r);
}

QMatrix signature_j() {
    QMatrix j = QMatrix::identity(4);
    for (int i = 1; i < 4; ++i) j.at(i, i) = Quaternion(-1.0);
    return j;
}

QMatrix halmos(const BlaschkePoint& a) {
    const QMatrix& v = a.mu_row();
    const double inv_sqrt = 1.0 / std::sqrt(1.0 - a.s());
    const QMatrix s_inv_half = rank1_spectral(v, [](double t) { return 1.0 / std::sqrt(t); });

    QMatrix h(4, 4);
    h.at(0, 0) = Quaternion(inv_sqrt);
    h.set_block(0, 1, -1.0 * (v * s_inv_half));
    h.set_block(1, 0, (-inv_sqrt) * v.adjoint());
    h.set_block(1, 1, s_inv_half);
    return h;
}

QMatrix rational_restrict(const Realization& r, const std::array<double, 3>& xvec) {
    r.validate();
    const int N = r.N();
    QMatrix pencil = QMatrix::identity(N);
    QMatrix rhs(N, r.m());
    for (int u = 1; u <= 3; ++u) {
        pencil = pencil - xvec[u - 1] * r.A_block(u);
        rhs = rhs + xvec[u - 1] * r.B_block(u);
    }
    return r.D + r.C * pencil.solve(rhs);
}

FueterSeries rational_series(const Realization& r, int trunc) {
    r.validate();
    FueterSeries out(r.n(), r.m(), trunc);
    out.add(MultiIndex{}, r.D);
    if (trunc == 0) return out;

    const FueterSeries resolvent = star_resolvent(r.A, trunc);
    FueterSeries mu_b(r.N(), r.m(), trunc);
    for (int u = 1; u <= 3; ++u) mu_b.add(MultiIndex::unit(u), r.B_block(u));
    const FueterSeries tail = star_mul(star_mul(FueterSeries::constant(r.C), resolvent), mu_b);
    return out + tail;
}

double rational_tail_bound(const Realization& r, const std::array<double, 3>& xvec, int trunc) {
    r.validate();
    double rho = 0.0;
    double bnorm = 0.0;
    for (int u = 1; u <= 3; ++u) {
        rho += std::abs(xvec[u - 1]) * r.A_block(u).frobenius_norm();
        bnorm += std::abs(xvec[u - 1]) * r.B_block(u).frobenius_norm();
    }
    if (rho >= 1.0) return std::numeric_limits<double>::infinity();
    return r.C.frobenius_norm() * bnorm * std::pow(rho, trunc) / (1.0 - rho);
}

Realization blaschke_realization(const BlaschkePoint& a) {
    const QMatrix& v = a.mu_row();
    Realization r;
    r.A = v.adjoint();                                                   // 3 x 1
    r.B = rank1_spectral(v, [](double t) { return std::sqrt(t); });     // 3 x 3
    r.C = QMatrix::scalar(Quaternion(std::sqrt(1.0 - a.s())));          // 1 x 1
    r.D = -1.0 * v;                                                      // 1 x 3
    return r;
}

}  // namespace vqf
