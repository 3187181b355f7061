#pragma once

#include <map>
#include <optional>

#include "vqf/errors.hpp"
#include "vqf/multiindex.hpp"
#include "vqf/point.hpp"
#include "vqf/qmatrix.hpp"

namespace vqf {

/// Finitely supported sum  f = sum_alpha mu^alpha f_alpha  with right
/// quaternionic-matrix coefficients, all of one shape. Terms are kept in
/// graded-lex order with exact zeros pruned; an optional truncation degree
/// records that terms above it were discarded (propagated pessimistically
/// through products).
class FueterSeries {
public:
    FueterSeries() = default;
    FueterSeries(int rows, int cols, std::optional<int> trunc = std::nullopt)
        : rows_(rows), cols_(cols), trunc_(trunc) {}

    static FueterSeries constant(const QMatrix& c, std::optional<int> trunc = std::nullopt) {
        FueterSeries s(c.rows(), c.cols(), trunc);
        s.add(MultiIndex{}, c);
        return s;
    }
    static FueterSeries scalar_one() { return constant(QMatrix::identity(1)); }
    /// The 1x3 row series (mu_1, mu_2, mu_3).
    static FueterSeries mu_row_series();

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::optional<int> trunc_degree() const { return trunc_; }
    void set_trunc_degree(std::optional<int> t);

    const std::map<MultiIndex, QMatrix>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    /// Accumulates coeff into the alpha term; drops terms beyond the
    /// truncation degree and exact-zero results.
    void add(const MultiIndex& alpha, const QMatrix& coeff);

    /// Coefficient at alpha; zero matrix when absent.
    QMatrix coeff(const MultiIndex& alpha) const;

    FueterSeries scale_left(const Quaternion& q) const;
    FueterSeries scale_right(const Quaternion& q) const;
    /// Right-multiplies every coefficient by the constant matrix c.
    FueterSeries right_mul(const QMatrix& c) const;

    friend FueterSeries operator+(const FueterSeries& f, const FueterSeries& g);
    friend FueterSeries operator-(const FueterSeries& f, const FueterSeries& g);
    friend bool operator==(const FueterSeries& f, const FueterSeries& g) {
        return f.rows_ == g.rows_ && f.cols_ == g.cols_ && f.terms_ == g.terms_;
    }

private:
    int rows_ = 1;
    int cols_ = 1;
    std::optional<int> trunc_;
    std::map<MultiIndex, QMatrix> terms_;
};

/// Largest coefficient distance between two series of equal shape.
double coeff_distance(const FueterSeries& f, const FueterSeries& g);

/// Reinterprets polynomial data sum x^alpha f_alpha as sum mu^alpha f_alpha,
/// the regular extension of the boundary values at x0 = 0.
FueterSeries ck_extend(const std::map<MultiIndex, QMatrix>& poly);

/// Coefficient convolution (f*g)_gamma = sum_{alpha+beta=gamma} f_alpha g_beta.
FueterSeries star_mul(const FueterSeries& f, const FueterSeries& g);

/// Neumann-series inverse of a square series with invertible constant term,
/// up to total degree trunc: f * g = identity + terms of degree > trunc.
FueterSeries star_inverse(const FueterSeries& f, int trunc);

/// sum_alpha mu^alpha(x) f_alpha, the scalar mu^alpha(x) multiplying each
/// coefficient from the left. Requires x in H*.
QMatrix eval(const FueterSeries& f, const PointH& x);

/// (I_N - sum_u mu^{e_u} A_u)^{-star} to degree trunc, with A stacked as
/// three N x N blocks A_1, A_2, A_3.
FueterSeries star_resolvent(const QMatrix& a_stacked, int trunc);

}  // namespace vqf
