#include "vqf/operators.hpp"

#include <cmath>
#include <limits>

namespace vqf {

namespace {

bool hstar_domain(const PointH& p) { return p.in_hstar(); }

Quaternion eval_checked(const Field& f, const PointH& p) {
    if (f.domain && !f.domain(p)) throw StencilOutOfDomain("stencil point leaves field domain");
    return f.eval(p);
}

void validate_scheme(const FDScheme& s) {
    if (!(s.h > 10.0 * std::numeric_limits<double>::epsilon()))
        throw BadBounds("fd scheme: step too small");
    if (s.order != 2 && s.order != 4) throw BadBounds("fd scheme: order must be 2 or 4");
}

Quaternion weighted_derivative_sum(const Field& f, const PointH& x, const FDScheme& scheme,
                                   bool use_coords) {
    // sum_u x_u d_u f   (or sum_u e_u d_u f in unit mode)
    Quaternion s = Quaternion::zero();
    for (int u = 1; u <= 3; ++u) {
        const Quaternion du = fd_partial(f, x, u, scheme);
        s += use_coords ? x.coord(u) * du : Quaternion::unit(u) * du;
    }
    return s;
}

Quaternion vec_inverse(const PointH& x, const char* where) {
    const Quaternion v = x.vec();
    if (v.norm() < 1e-14 * (1.0 + x.norm()))
        throw SingularVectorPart(std::string(where) + ": vector part vanishes");
    return v.inverse();
}

}  // namespace

Field field_mu_alpha(const MultiIndex& alpha) {
    return {[alpha](const PointH& p) { return mu_alpha(p, alpha); }, hstar_domain};
}

Field field_x_alpha(const MultiIndex& alpha) {
    return {[alpha](const PointH& p) { return Quaternion(x_pow_alpha(p, alpha)); }};
}

Field field_qpow(int n, const Quaternion& b) {
    return {[n, b](const PointH& p) { return p.quaternion().pow(n) * b; }};
}

Field field_constant(const Quaternion& c) {
    return {[c](const PointH&) { return c; }};
}

Field field_series_entry(const FueterSeries& f, int i, int j) {
    return {[f, i, j](const PointH& p) { return eval(f, p).at(i, j); }, hstar_domain};
}

Quaternion fd_partial(const Field& f, const PointH& x, int axis, const FDScheme& scheme) {
    validate_scheme(scheme);
    const double h = scheme.h;
    const double c = x.coord(axis);
    if (scheme.order == 2) {
        const Quaternion fp = eval_checked(f, x.with_coord(axis, c + h));
        const Quaternion fm = eval_checked(f, x.with_coord(axis, c - h));
        return (fp - fm) / (2.0 * h);
    }
    const Quaternion fp2 = eval_checked(f, x.with_coord(axis, c + 2 * h));
    const Quaternion fp1 = eval_checked(f, x.with_coord(axis, c + h));
    const Quaternion fm1 = eval_checked(f, x.with_coord(axis, c - h));
    const Quaternion fm2 = eval_checked(f, x.with_coord(axis, c - 2 * h));
    return (-1.0 * fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
}

Quaternion apply_vq(const Field& f, const PointH& x, const FDScheme& scheme) {
    const Quaternion inv_vec = vec_inverse(x, "apply_vq");
    const Quaternion d0 = fd_partial(f, x, 0, scheme);
    return d0 - inv_vec * weighted_derivative_sum(f, x, scheme, /*use_coords=*/true);
}

Quaternion apply_vq_bar(const Field& f, const PointH& x, const FDScheme& scheme) {
    const Quaternion inv_vec = vec_inverse(x, "apply_vq_bar");
    const Quaternion d0 = fd_partial(f, x, 0, scheme);
    return d0 + inv_vec * weighted_derivative_sum(f, x, scheme, /*use_coords=*/false);
}

Quaternion apply_vq_bar_euler(const Field& f, const PointH& x, const FDScheme& scheme) {
    const Quaternion inv_vec = vec_inverse(x, "apply_vq_bar_euler");
    const Quaternion d0 = fd_partial(f, x, 0, scheme);
    return d0 + inv_vec * weighted_derivative_sum(f, x, scheme, /*use_coords=*/true);
}

Quaternion apply_gq(const Field& f, const PointH& x, const FDScheme& scheme) {
    const Quaternion d0 = fd_partial(f, x, 0, scheme);
    return x.vec_norm_sq() * d0 +
           x.vec() * weighted_derivative_sum(f, x, scheme, /*use_coords=*/true);
}

Quaternion euler(const Field& f, const PointH& x, const FDScheme& scheme) {
    return weighted_derivative_sum(f, x, scheme, /*use_coords=*/true);
}

Quaternion euler_exponential(const MultiIndex& alpha, const PointH& x) {
    if (!x.in_hstar()) throw SingularVectorPart("euler_exponential: point not in H*");
    const int m = alpha.degree();
    const Quaternion t = x.x0 * x.vec().inverse();
    // (E 1/vec)^n annihilates x^alpha past n = |alpha|, so the exponential
    // collapses to the binomial sum below.
    Quaternion sum = Quaternion::zero();
    Quaternion tpow = Quaternion::one();
    double binom = 1.0;
    for (int k = 0; k <= m; ++k) {
        sum += binom * tpow;
        tpow = tpow * t;
        binom = binom * static_cast<double>(m - k) / static_cast<double>(k + 1);
    }
    return x_pow_alpha(x, alpha) * sum;
}

Quaternion gleason_remainder(const Field& f, const PointH& a, const PointH& b, int u,
                             int quad_points, const FDScheme& scheme) {
    if (u < 1 || u > 3) throw Error("gleason_remainder: axis must be 1, 2 or 3");
    if (quad_points < 3 || quad_points % 2 == 0)
        throw BadBounds("gleason_remainder: quad_points must be odd and >= 3");
    const PointH d = b - a;
    for (int i = 0; i < 64; ++i) {
        const double t = static_cast<double>(i) / 63.0;
        if ((a + t * d).vec_norm() <= 0.01)
            throw SegmentLeavesDomain("gleason_remainder: segment too close to vec = 0");
    }
    const int n = quad_points - 1;
    const double ht = 1.0 / n;
    Quaternion acc = Quaternion::zero();
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        const Quaternion v = fd_partial(f, a + t * d, u, scheme);
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        acc += w * v;
    }
    return acc * (ht / 3.0);
}

}  // namespace vqf
