#include "vqf/series.hpp"

#include <algorithm>

#include "vqf/fueter.hpp"

namespace vqf {

FueterSeries FueterSeries::mu_row_series() {
    FueterSeries s(1, 3);
    for (int u = 1; u <= 3; ++u) {
        QMatrix c(1, 3);
        c.at(0, u - 1) = Quaternion::one();
        s.add(MultiIndex::unit(u), c);
    }
    return s;
}

void FueterSeries::set_trunc_degree(std::optional<int> t) {
    trunc_ = t;
    if (trunc_) std::erase_if(terms_, [&](const auto& kv) { return kv.first.degree() > *trunc_; });
}

void FueterSeries::add(const MultiIndex& alpha, const QMatrix& coeff) {
    if (coeff.rows() != rows_ || coeff.cols() != cols_)
        throw ShapeMismatch("series: coefficient shape differs from series shape");
    if (trunc_ && alpha.degree() > *trunc_) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(alpha, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

QMatrix FueterSeries::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? QMatrix(rows_, cols_) : it->second;
}

FueterSeries FueterSeries::scale_left(const Quaternion& q) const {
    FueterSeries out(rows_, cols_, trunc_);
    for (const auto& [a, c] : terms_) out.add(a, c.scale_left(q));
    return out;
}

FueterSeries FueterSeries::scale_right(const Quaternion& q) const {
    FueterSeries out(rows_, cols_, trunc_);
    for (const auto& [a, c] : terms_) out.add(a, c.scale_right(q));
    return out;
}

FueterSeries FueterSeries::right_mul(const QMatrix& c) const {
    FueterSeries out(rows_, c.cols(), trunc_);
    for (const auto& [a, coeff] : terms_) out.add(a, coeff * c);
    return out;
}

static std::optional<int> merged_trunc(const FueterSeries& f, const FueterSeries& g) {
    if (f.trunc_degree() && g.trunc_degree())
        return std::min(*f.trunc_degree(), *g.trunc_degree());
    return f.trunc_degree() ? f.trunc_degree() : g.trunc_degree();
}

FueterSeries operator+(const FueterSeries& f, const FueterSeries& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw ShapeMismatch("series add: shapes differ");
    FueterSeries out(f.rows(), f.cols(), merged_trunc(f, g));
    for (const auto& [a, c] : f.terms()) out.add(a, c);
    for (const auto& [a, c] : g.terms()) out.add(a, c);
    return out;
}

FueterSeries operator-(const FueterSeries& f, const FueterSeries& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw ShapeMismatch("series sub: shapes differ");
    FueterSeries out(f.rows(), f.cols(), merged_trunc(f, g));
    for (const auto& [a, c] : f.terms()) out.add(a, c);
    for (const auto& [a, c] : g.terms()) out.add(a, -1.0 * c);
    return out;
}

double coeff_distance(const FueterSeries& f, const FueterSeries& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw ShapeMismatch("coeff_distance: shapes differ");
    double worst = 0.0;
    auto visit = [&](const FueterSeries& a, const FueterSeries& b) {
        for (const auto& [alpha, c] : a.terms())
            worst = std::max(worst, (c - b.coeff(alpha)).frobenius_norm());
    };
    visit(f, g);
    visit(g, f);
    return worst;
}

FueterSeries ck_extend(const std::map<MultiIndex, QMatrix>& poly) {
    if (poly.empty()) return FueterSeries(1, 1);
    const int rows = poly.begin()->second.rows();
    const int cols = poly.begin()->second.cols();
    FueterSeries out(rows, cols);
    for (const auto& [a, c] : poly) out.add(a, c);
    return out;
}

FueterSeries star_mul(const FueterSeries& f, const FueterSeries& g) {
    if (f.cols() != g.rows()) throw ShapeMismatch("star_mul: f.cols != g.rows");
    FueterSeries out(f.rows(), g.cols(), merged_trunc(f, g));
    const auto trunc = out.trunc_degree();
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) {
            const MultiIndex gamma = a + b;
            if (trunc && gamma.degree() > *trunc) continue;
            out.add(gamma, ca * cb);
        }
    return out;
}

FueterSeries star_inverse(const FueterSeries& f, int trunc) {
    if (f.rows() != f.cols()) throw ShapeMismatch("star_inverse: series not square");
    const QMatrix f0 = f.coeff(MultiIndex{});
    QMatrix f0_inv;
    try {
        f0_inv = f0.inverse();
    } catch (const SingularPencil&) {
        throw SingularConstantTerm("star_inverse: constant term not invertible");
    }
    // f = f0 (I + w) with w = f0^{-1} (f - f0); invert the unit part by the
    // Neumann series, which is finite modulo terms of degree > trunc.
    FueterSeries w(f.rows(), f.cols(), trunc);
    for (const auto& [a, c] : f.terms()) {
        if (a.degree() == 0) continue;
        w.add(a, f0_inv * c);
    }
    FueterSeries acc = FueterSeries::constant(QMatrix::identity(f.rows()), trunc);
    FueterSeries power = acc;
    for (int k = 1; k <= trunc; ++k) {
        power = star_mul(power, w);
        if (power.empty()) break;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        for (const auto& [a, c] : power.terms()) acc.add(a, sign * c);
    }
    return acc.right_mul(f0_inv);
}

QMatrix eval(const FueterSeries& f, const PointH& x) {
    if (!x.in_hstar()) throw SingularVectorPart("series eval: point not in H*");
    QMatrix out(f.rows(), f.cols());
    for (const auto& [a, c] : f.terms()) out = out + c.scale_left(mu_alpha(x, a));
    return out;
}

FueterSeries star_resolvent(const QMatrix& a_stacked, int trunc) {
    const int N = a_stacked.cols();
    if (a_stacked.rows() != 3 * N)
        throw ShapeMismatch("star_resolvent: expected three stacked N x N blocks");
    FueterSeries pencil(N, N, trunc);
    pencil.add(MultiIndex{}, QMatrix::identity(N));
    for (int u = 1; u <= 3; ++u)
        pencil.add(MultiIndex::unit(u), -1.0 * a_stacked.block((u - 1) * N, 0, N, N));
    return star_inverse(pencil, trunc);
}

}  // namespace vqf
