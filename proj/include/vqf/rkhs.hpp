#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "vqf/fueter.hpp"
#include "vqf/multiindex.hpp"
#include "vqf/point.hpp"
#include "vqf/qmatrix.hpp"
#include "vqf/series.hpp"

namespace vqf {

/// Exact rational scalar for the kernel weights c_alpha; identities such as
/// the structural identity must hold with no rounding at all.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

Rational rational_factorial(int n);

/// Weight family c_alpha of a kernel K_c. The arveson kind computes
/// c_alpha = alpha!/|alpha|! on demand (support = all of N_0^3); a custom kind
/// carries an explicit finitely-supported table.
class CoefficientFamily {
public:
    static CoefficientFamily arveson();
    static CoefficientFamily custom(std::map<MultiIndex, Rational> values);

    bool is_arveson() const { return arveson_; }
    bool contains(const MultiIndex& alpha) const;
    /// c_alpha; throws Error when a custom family lacks the index.
    Rational at(const MultiIndex& alpha) const;

private:
    CoefficientFamily() = default;
    bool arveson_ = false;
    std::map<MultiIndex, Rational> values_;
};

struct KernelValue {
    Quaternion value;          // partial sum over |alpha| <= trunc
    double tail_bound = 0.0;   // geometric bound on the dropped tail
    bool tail_valid = false;   // arveson kind with |q_x| |q_y| < 1
};

/// K_c(x, y) truncated at |alpha| <= trunc:
/// sum mu^alpha(x) conj(mu^alpha(y)) / c_alpha over the family's support.
KernelValue kernel_eval(const CoefficientFamily& c, const PointH& x, const PointH& y, int trunc);

/// Hermitian Gram matrix G_ij = K_c(x_i, x_j).
QMatrix gram_matrix(const CoefficientFamily& c, const std::vector<PointH>& points, int trunc);

/// M_u: index shift alpha -> alpha + e_u on a scalar-shaped series.
FueterSeries shift(int u, const FueterSeries& f);

/// B_u: term-wise (alpha_u / |alpha|) with shift alpha -> alpha - e_u;
/// terms with alpha_u = 0 (in particular the constant term) map to zero.
FueterSeries backward_shift(int u, const FueterSeries& f);

/// M_u^* in H(K_c): term-wise (c_alpha / c_{alpha - e_u}) with the downward
/// shift; the ratio is formed in exact rationals before scaling.
FueterSeries shift_adjoint(int u, const CoefficientFamily& c, const FueterSeries& f);

/// 1 - sum_{u: alpha_u > 0} c_alpha / c_{alpha - e_u}, exactly. Zero for every
/// alpha with |alpha| >= 1 characterizes the arveson weights.
Rational structural_defect(const CoefficientFamily& c, const MultiIndex& alpha);

/// Membership in the convergence set of the diagonal kernel: x in H* with
/// |q| < 1 (closed form of sum |mu^alpha|^2 |alpha|!/alpha! < infinity).
bool in_omega_arveson(const PointH& x);

/// Block Gram matrix of the multiplier kernel
///   K(x,y) = sum_{|alpha|<=trunc} (|alpha|!/alpha!) { mu^alpha(x) conj(mu^alpha(y)) I_n
///            - (mu^alpha * S)(x) ((mu^alpha * S)(y))^* }
/// for an n x m series S; output is (n P) x (n P) over P points. Points outside
/// the convergence set are accepted (the truncated sum is still defined); the
/// CLI warns about them.
QMatrix multiplier_kernel_gram(const FueterSeries& S, const std::vector<PointH>& points,
                               int trunc);

}  // namespace vqf
