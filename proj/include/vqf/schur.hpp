#pragma once

#include <array>

#include "vqf/fueter.hpp"
#include "vqf/point.hpp"
#include "vqf/qmatrix.hpp"
#include "vqf/series.hpp"

namespace vqf {

/// State-space data (A, B, C, D) of a rational function
///   R = D + C (I - mu A)^{-star} star mu B,
/// with A stacked as three N x N blocks and B as three N x m blocks.
struct Realization {
    QMatrix A;  // 3N x N
    QMatrix B;  // 3N x m
    QMatrix C;  // n x N
    QMatrix D;  // n x m

    int N() const { return A.cols(); }
    int n() const { return C.rows(); }
    int m() const { return D.cols(); }

    /// Throws ShapeMismatch unless the block shapes are consistent.
    void validate() const;

    QMatrix A_block(int u) const { return A.block((u - 1) * N(), 0, N(), A.cols()); }
    QMatrix B_block(int u) const { return B.block((u - 1) * N(), 0, N(), B.cols()); }

    /// The (3N + n) x (N + m) matrix stacking [A_u B_u; ...; C D].
    QMatrix stacked() const;
};

/// A base point a of the unit-ball domain (sum_u |mu_u(a)|^2 < 1), together
/// with the cached row mu(a) and s = mu(a) mu(a)^* = |a|^2.
class BlaschkePoint {
public:
    explicit BlaschkePoint(const PointH& a);

    const PointH& point() const { return a_; }
    const QMatrix& mu_row() const { return mu_row_; }
    double s() const { return s_; }

private:
    PointH a_;
    QMatrix mu_row_;  // 1 x 3
    double s_ = 0.0;
};

/// The elementary contractive factor vanishing at a:
///   B_a = (1-s)^{1/2} (1 - mu(x) mu(a)^*)^{-star} star (mu(x) - mu(a)) (I_3 - mu(a)^* mu(a))^{-1/2},
/// built to total degree trunc as a 1 x 3 series.
FueterSeries blaschke_series(const BlaschkePoint& a, int trunc = 12);

/// Geometric estimate of the dropped tail of blaschke_series at degree trunc:
/// sqrt(s)^{trunc+1} / (1 - sqrt(s)).
double blaschke_tail_estimate(double s, int trunc);

/// 4x4 extension H(a) = [[(1-s)^{-1/2}, -mu(a) (I_3 - mu(a)^* mu(a))^{-1/2}],
///                       [-mu(a)^* (1-s)^{-1/2}, (I_3 - mu(a)^* mu(a))^{-1/2}]],
/// J-unitary for J = diag(1, -1, -1, -1).
QMatrix halmos(const BlaschkePoint& a);

/// J = diag(1, -1, -1, -1).
QMatrix signature_j();

/// Restriction to x0 = 0: D + C (I_N - sum x_u A_u)^{-1} (sum x_u B_u).
QMatrix rational_restrict(const Realization& r, const std::array<double, 3>& xvec);

/// The series D + C star (I - mu A)^{-star} star (sum_u mu^{e_u} B_u), to
/// total degree trunc.
FueterSeries rational_series(const Realization& r, int trunc = 12);

/// Geometric tail bound for rational_restrict vs the degree-trunc series at a
/// restriction point: |C|_F |sum x_u B_u|_F rho^trunc / (1 - rho) with
/// rho = sum_u |x_u| |A_u|_F (valid when rho < 1).
double rational_tail_bound(const Realization& r, const std::array<double, 3>& xvec, int trunc);

/// State-space data of B_a read off the unitary matrix
/// T = [[mu(a)^*, (I_3 - mu(a)^* mu(a))^{1/2}], [(1-s)^{1/2}, -mu(a)]]
/// (N = 1, n = 1, m = 3).
Realization blaschke_realization(const BlaschkePoint& a);

}  // namespace vqf
