#pragma once

#include <functional>

#include "vqf/fueter.hpp"
#include "vqf/point.hpp"
#include "vqf/quat.hpp"
#include "vqf/series.hpp"

namespace vqf {

/// A quaternion-valued function of x = (x0..x3), assumed C^1 on its domain.
/// eval must be deterministic and reentrant. An empty domain predicate means
/// "defined wherever it is called".
struct Field {
    std::function<Quaternion(const PointH&)> eval;
    std::function<bool(const PointH&)> domain;

    Field() = default;
    Field(std::function<Quaternion(const PointH&)> e) : eval(std::move(e)) {}
    Field(std::function<Quaternion(const PointH&)> e, std::function<bool(const PointH&)> d)
        : eval(std::move(e)), domain(std::move(d)) {}
};

/// Central-difference scheme. order is 2 or 4; h must stay well above
/// machine epsilon.
struct FDScheme {
    double h = 1e-5;
    int order = 2;
};

Field field_mu_alpha(const MultiIndex& alpha);
Field field_x_alpha(const MultiIndex& alpha);
/// q -> q^n b
Field field_qpow(int n, const Quaternion& b);
Field field_constant(const Quaternion& c);
/// Entry (i, j) of the pointwise evaluation of a series.
Field field_series_entry(const FueterSeries& f, int i = 0, int j = 0);

/// d/dx_axis by central differences; validates the stencil against the
/// field's domain predicate.
Quaternion fd_partial(const Field& f, const PointH& x, int axis, const FDScheme& scheme = {});

/// V_q f = d0 f - inv(vec q) * sum_u x_u d_u f   (inverse multiplies from the left).
Quaternion apply_vq(const Field& f, const PointH& x, const FDScheme& scheme = {});

/// Conjugate operator as printed: d0 f + inv(vec q) * sum_u e_u d_u f.
Quaternion apply_vq_bar(const Field& f, const PointH& x, const FDScheme& scheme = {});

/// Conjugate operator in the Euler form the regularity computations use:
/// d0 f + inv(vec q) * sum_u x_u d_u f. This is the form satisfying the
/// Appell identity (1/2) Vbar mu^alpha = |alpha| q^{-1} mu^alpha.
Quaternion apply_vq_bar_euler(const Field& f, const PointH& x, const FDScheme& scheme = {});

/// Unnormalized operator |vec q|^2 d0 f + vec(q) * sum_u x_u d_u f; equals
/// |vec q|^2 V_q f.
Quaternion apply_gq(const Field& f, const PointH& x, const FDScheme& scheme = {});

/// Euler operator E f = sum_u x_u d_u f.
Quaternion euler(const Field& f, const PointH& x, const FDScheme& scheme = {});

/// The finite sum x^alpha sum_{n=0}^{|alpha|} binom(|alpha|, n) (x0 inv(vec q))^n,
/// i.e. exp(x0 (1/vec q) E) applied to x^alpha. Equals mu_alpha(x, alpha).
Quaternion euler_exponential(const MultiIndex& alpha, const PointH& x);

/// R_u^{ab} f = integral_0^1 (d_u f)(a + t(b-a)) dt by composite Simpson with
/// quad_points nodes (odd, >= 3); the segment must keep |vec| > 0.01 at 64
/// uniform samples.
Quaternion gleason_remainder(const Field& f, const PointH& a, const PointH& b, int u,
                             int quad_points = 1001, const FDScheme& scheme = {});

}  // namespace vqf
