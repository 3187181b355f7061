#pragma once

#include "vqf/multiindex.hpp"
#include "vqf/point.hpp"
#include "vqf/quat.hpp"
#include "vqf/series.hpp"

namespace vqf {

/// The regular coordinate extensions mu_u(x) = x_u (1 + x0 / vec(q)), u = 1..3.
/// Defined on H* only.
Quaternion mu_u(const PointH& x, int u);

/// mu^alpha by the closed form x^alpha (1 + x0/vec(q))^{|alpha|}.
Quaternion mu_alpha(const PointH& x, const MultiIndex& alpha);

/// mu^alpha as the ordered product mu_1^{a1} mu_2^{a2} mu_3^{a3}; the factors
/// commute, so this agrees with the closed form. Kept as a cross-check route.
Quaternion mu_alpha_product(const PointH& x, const MultiIndex& alpha);

/// Classical coordinate extension zeta_u(x) = x_u - x0 e_u (defined on all of R^4).
Quaternion zeta_u(const PointH& x, int u);

/// zeta^alpha: the symmetric product of a1 copies of zeta_1, a2 of zeta_2,
/// a3 of zeta_3. Degree capped at 8.
Quaternion zeta_alpha(const PointH& x, const MultiIndex& alpha);

/// Expansion coefficient c_{alpha,n} = (n!/alpha!) e1^{x a1} x e2^{x a2} x e3^{x a3}
/// (symmetric product of the units). Requires |alpha| = n <= 8.
Quaternion c_alpha_n(const MultiIndex& alpha, int n);

/// q^n written in the monomial basis: the scalar series with support
/// {|alpha| = n} and coefficients c_{alpha,n}. Requires 0 <= n <= 8.
FueterSeries expand_qn(int n);

/// Box-with-annular-coordinates domain: r < |x_u| < R for u = 1..3 and |x0| < rho.
bool in_omega_rRrho(const PointH& x, double r, double R, double rho);

/// Growth constant L = R (1 + rho / (sqrt(3) r)) bounding |mu^alpha|^{1/|alpha|} there.
double omega_growth_bound(double r, double R, double rho);

/// Unit-ball analogue: sum_u |mu_u(x)|^2 < 1. Requires x in H*.
bool in_omega_1(const PointH& x);

/// sum_u |mu_u(x)|^2, which collapses to |q|^2 on H*.
double mu_sum_sq(const PointH& x);

struct ArvesonDiag {
    double value = 0.0;        // partial sum over |alpha| <= trunc
    double tail_bound = 0.0;   // |q|^{2(trunc+1)} / (1 - |q|^2), when valid
    bool tail_valid = false;   // true iff |q| < 1
};

/// Partial sums of the diagonal kernel sum_alpha |mu^alpha(x)|^2 |alpha|!/alpha!.
/// The full sum is 1/(1 - |q|^2) for |q| < 1 and diverges otherwise.
ArvesonDiag arveson_diag(const PointH& x, int trunc);

/// Single level of the diagonal: sum over |alpha| = n. Equals |q|^{2n}.
double arveson_diag_level(const PointH& x, int n);

}  // namespace vqf
