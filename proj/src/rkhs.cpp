#include "vqf/rkhs.hpp"

#include <cmath>

namespace vqf {

Rational rational_factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return Rational(r);
}

CoefficientFamily CoefficientFamily::arveson() {
    CoefficientFamily f;
    f.arveson_ = true;
    return f;
}

CoefficientFamily CoefficientFamily::custom(std::map<MultiIndex, Rational> values) {
    for (const auto& [a, v] : values)
        if (v <= 0) throw Error("coefficient family: weights must be positive");
    CoefficientFamily f;
    f.values_ = std::move(values);
    return f;
}

bool CoefficientFamily::contains(const MultiIndex& alpha) const {
    return arveson_ || values_.count(alpha) > 0;
}

Rational CoefficientFamily::at(const MultiIndex& alpha) const {
    if (arveson_) {
        return Rational(rational_factorial(alpha.a1) * rational_factorial(alpha.a2) *
                        rational_factorial(alpha.a3)) /
               rational_factorial(alpha.degree());
    }
    auto it = values_.find(alpha);
    if (it == values_.end()) throw Error("coefficient family: index outside support");
    return it->second;
}

KernelValue kernel_eval(const CoefficientFamily& c, const PointH& x, const PointH& y, int trunc) {
    if (!x.in_hstar() || !y.in_hstar())
        throw SingularVectorPart("kernel_eval: points must lie in H*");
    KernelValue out;
    for (const auto& alpha : indices_up_to_degree(trunc)) {
        if (!c.contains(alpha)) continue;
        const double inv_c = 1.0 / c.at(alpha).convert_to<double>();
        out.value += inv_c * (mu_alpha(x, alpha) * mu_alpha(y, alpha).conj());
    }
    const double r = x.norm() * y.norm();
    if (c.is_arveson() && r < 1.0) {
        out.tail_valid = true;
        out.tail_bound = std::pow(r, trunc + 1) / (1.0 - r);
    }
    return out;
}

QMatrix gram_matrix(const CoefficientFamily& c, const std::vector<PointH>& points, int trunc) {
    const int p = static_cast<int>(points.size());
    QMatrix g(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j <= i; ++j) {
            const Quaternion v = kernel_eval(c, points[i], points[j], trunc).value;
            g.at(i, j) = v;
            if (j != i) g.at(j, i) = v.conj();
        }
    return g;
}

static void require_scalar_shape(const FueterSeries& f, const char* where) {
    if (f.rows() != 1 || f.cols() != 1)
        throw ShapeMismatch(std::string(where) + ": expected a scalar-shaped series");
}

FueterSeries shift(int u, const FueterSeries& f) {
    require_scalar_shape(f, "shift");
    FueterSeries out(1, 1, f.trunc_degree());
    for (const auto& [a, c] : f.terms()) out.add(a.plus(u), c);
    return out;
}

FueterSeries backward_shift(int u, const FueterSeries& f) {
    require_scalar_shape(f, "backward_shift");
    FueterSeries out(1, 1, f.trunc_degree());
    for (const auto& [a, c] : f.terms()) {
        if (a[u] == 0) continue;
        const double factor = static_cast<double>(a[u]) / a.degree();
        out.add(a.minus(u), factor * c);
    }
    return out;
}

FueterSeries shift_adjoint(int u, const CoefficientFamily& c, const FueterSeries& f) {
    require_scalar_shape(f, "shift_adjoint");
    FueterSeries out(1, 1, f.trunc_degree());
    for (const auto& [a, coeff] : f.terms()) {
        if (a[u] == 0) continue;
        const Rational ratio = c.at(a) / c.at(a.minus(u));
        out.add(a.minus(u), ratio.convert_to<double>() * coeff);
    }
    return out;
}

Rational structural_defect(const CoefficientFamily& c, const MultiIndex& alpha) {
    if (alpha.degree() < 1) throw Error("structural_defect: |alpha| must be >= 1");
    Rational defect(1);
    for (int u = 1; u <= 3; ++u) {
        if (alpha[u] == 0) continue;
        defect -= c.at(alpha) / c.at(alpha.minus(u));
    }
    return defect;
}

bool in_omega_arveson(const PointH& x) { return x.in_hstar() && x.norm_sq() < 1.0; }

QMatrix multiplier_kernel_gram(const FueterSeries& S, const std::vector<PointH>& points,
                               int trunc) {
    const int n = S.rows();
    const int p = static_cast<int>(points.size());
    for (const auto& pt : points)
        if (!pt.in_hstar()) throw SingularVectorPart("multiplier_kernel_gram: point not in H*");

    // mu^gamma(x) for every gamma reachable by alpha + supp(S), per point
    const int max_deg = trunc + S.max_degree();
    const auto gammas = indices_up_to_degree(max_deg);
    std::vector<std::map<MultiIndex, Quaternion>> mu_tab(p);
    for (int i = 0; i < p; ++i)
        for (const auto& g : gammas) mu_tab[i].emplace(g, mu_alpha(points[i], g));

    const auto alphas = indices_up_to_degree(trunc);
    // (mu^alpha star S)(x_i) for every alpha and point
    std::vector<std::vector<QMatrix>> sval(p);
    for (int i = 0; i < p; ++i) {
        sval[i].reserve(alphas.size());
        for (const auto& alpha : alphas) {
            QMatrix acc(S.rows(), S.cols());
            for (const auto& [beta, cb] : S.terms())
                acc = acc + cb.scale_left(mu_tab[i].at(alpha + beta));
            sval[i].push_back(std::move(acc));
        }
    }

    QMatrix g(n * p, n * p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j <= i; ++j) {
            QMatrix block(n, n);
            for (size_t k = 0; k < alphas.size(); ++k) {
                const double w = multinomial_d(alphas[k]);
                const Quaternion diag =
                    mu_tab[i].at(alphas[k]) * mu_tab[j].at(alphas[k]).conj();
                QMatrix term = QMatrix::identity(n).scale_left(w * diag);
                block = block + term - w * (sval[i][k] * sval[j][k].adjoint());
            }
            g.set_block(i * n, j * n, block);
            if (j != i) g.set_block(j * n, i * n, block.adjoint());
        }
    return g;
}

}  // namespace vqf
