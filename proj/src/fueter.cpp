#include "vqf/fueter.hpp"

#include <cmath>

namespace vqf {

namespace {

void require_hstar(const PointH& x, const char* where) {
    if (!x.in_hstar()) throw SingularVectorPart(std::string(where) + ": point not in H*");
}

void require_axis(int u, const char* where) {
    if (u < 1 || u > 3) throw Error(std::string(where) + ": axis must be 1, 2 or 3");
}

// 1 + x0 / vec(q), the commuting base common to every mu
Quaternion mu_base(const PointH& x) {
    return Quaternion::one() + x.x0 * x.vec().inverse();
}

}  // namespace

Quaternion mu_u(const PointH& x, int u) {
    require_axis(u, "mu_u");
    require_hstar(x, "mu_u");
    return x.coord(u) * mu_base(x);
}

Quaternion mu_alpha(const PointH& x, const MultiIndex& alpha) {
    require_hstar(x, "mu_alpha");
    if (alpha.degree() == 0) return Quaternion::one();
    return x_pow_alpha(x, alpha) * mu_base(x).pow(alpha.degree());
}

Quaternion mu_alpha_product(const PointH& x, const MultiIndex& alpha) {
    require_hstar(x, "mu_alpha_product");
    Quaternion r = Quaternion::one();
    for (int u = 1; u <= 3; ++u) {
        const Quaternion m = mu_u(x, u);
        for (int i = 0; i < alpha[u]; ++i) r = r * m;
    }
    return r;
}

Quaternion zeta_u(const PointH& x, int u) {
    require_axis(u, "zeta_u");
    return Quaternion(x.coord(u)) - x.x0 * Quaternion::unit(u);
}

Quaternion zeta_alpha(const PointH& x, const MultiIndex& alpha) {
    const int n = alpha.degree();
    if (n > 8) throw DegreeCap("zeta_alpha: degree above 8");
    if (n == 0) return Quaternion::one();
    std::vector<Quaternion> factors;
    factors.reserve(n);
    for (int u = 1; u <= 3; ++u)
        for (int i = 0; i < alpha[u]; ++i) factors.push_back(zeta_u(x, u));
    return symmetric_product(factors);
}

Quaternion c_alpha_n(const MultiIndex& alpha, int n) {
    if (alpha.degree() != n) throw DegreeMismatch("c_alpha_n: |alpha| != n");
    if (n > 8) throw DegreeCap("c_alpha_n: degree above 8");
    if (n == 0) return Quaternion::one();
    std::vector<Quaternion> units;
    units.reserve(n);
    for (int u = 1; u <= 3; ++u)
        for (int i = 0; i < alpha[u]; ++i) units.push_back(Quaternion::unit(u));
    const double scale = static_cast<double>(factorial_u64(n)) /
                         static_cast<double>(multi_factorial(alpha));
    return scale * symmetric_product(units);
}

FueterSeries expand_qn(int n) {
    if (n < 0 || n > 8) throw DegreeCap("expand_qn: n must be in [0, 8]");
    FueterSeries s(1, 1);
    for (const auto& alpha : indices_of_degree(n))
        s.add(alpha, QMatrix::scalar(c_alpha_n(alpha, n)));
    return s;
}

bool in_omega_rRrho(const PointH& x, double r, double R, double rho) {
    if (!(0 < r && r < R) || !(rho > 0)) throw BadBounds("in_omega_rRrho: need 0 < r < R, rho > 0");
    for (int u = 1; u <= 3; ++u) {
        const double a = std::abs(x.coord(u));
        if (!(r < a && a < R)) return false;
    }
    return std::abs(x.x0) < rho;
}

double omega_growth_bound(double r, double R, double rho) {
    if (!(0 < r && r < R) || !(rho > 0)) throw BadBounds("omega_growth_bound: bad bounds");
    return R * (1.0 + rho / (std::sqrt(3.0) * r));
}

double mu_sum_sq(const PointH& x) {
    require_hstar(x, "mu_sum_sq");
    double s = 0.0;
    for (int u = 1; u <= 3; ++u) s += mu_u(x, u).norm_sq();
    return s;
}

bool in_omega_1(const PointH& x) { return mu_sum_sq(x) < 1.0; }

ArvesonDiag arveson_diag(const PointH& x, int trunc) {
    require_hstar(x, "arveson_diag");
    ArvesonDiag out;
    for (int n = 0; n <= trunc; ++n) out.value += arveson_diag_level(x, n);
    const double q2 = x.norm_sq();
    if (q2 < 1.0) {
        out.tail_valid = true;
        out.tail_bound = std::pow(q2, trunc + 1) / (1.0 - q2);
    }
    return out;
}

double arveson_diag_level(const PointH& x, int n) {
    require_hstar(x, "arveson_diag_level");
    double s = 0.0;
    for (const auto& alpha : indices_of_degree(n))
        s += multinomial_d(alpha) * mu_alpha(x, alpha).norm_sq();
    return s;
}

}  // namespace vqf
