#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "vqf/errors.hpp"
#include "vqf/quat.hpp"

namespace vqf {

/// Dense quaternionic matrix at desk scale (realizations, Gram matrices,
/// series coefficients). Row-major, value semantics.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Quaternion::one();
        return m;
    }
    static QMatrix scalar(const Quaternion& q) {
        QMatrix m(1, 1);
        m.at(0, 0) = q;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_scalar_shape() const { return rows_ == 1 && cols_ == 1; }

    Quaternion& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Quaternion& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<Quaternion>& data() const { return data_; }

    bool is_zero() const {
        for (const auto& q : data_)
            if (!q.is_zero()) return false;
        return true;
    }

    QMatrix adjoint() const {
        QMatrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
        return m;
    }

    QMatrix block(int i0, int j0, int nrows, int ncols) const {
        QMatrix m(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) m.at(i, j) = at(i0 + i, j0 + j);
        return m;
    }
    void set_block(int i0, int j0, const QMatrix& b) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
    }

    /// Entry-wise left multiplication by a scalar quaternion.
    QMatrix scale_left(const Quaternion& q) const {
        QMatrix m(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = q * data_[k];
        return m;
    }
    /// Entry-wise right multiplication by a scalar quaternion.
    QMatrix scale_right(const Quaternion& q) const {
        QMatrix m(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * q;
        return m;
    }

    double frobenius_norm_sq() const {
        double s = 0.0;
        for (const auto& q : data_) s += q.norm_sq();
        return s;
    }
    double frobenius_norm() const;
    double max_entry_norm() const;

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(double a, const QMatrix& m);
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Solves (*this) Y = rhs by Gaussian elimination with partial pivoting on
    /// the quaternion modulus; row operations multiply from the left. Raises
    /// SingularPencil when the best pivot falls below 1e-12 of its row norm.
    QMatrix solve(const QMatrix& rhs) const;
    QMatrix inverse() const { return solve(identity(rows_)); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Quaternion> data_;
};

/// Small dense complex matrix, only used as the target of complexify().
struct CMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> data;

    CMatrix() = default;
    CMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}
    std::complex<double>& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const std::complex<double>& at(int i, int j) const {
        return data[static_cast<size_t>(i) * cols + j];
    }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    double max_abs() const;
};

/// Adjoint representation over the e1-slice: q = a + b e2 with a, b complex,
/// mapped block-wise to [[a, b], [-conj(b), conj(a)]]. Multiplicative:
/// complexify(M N) = complexify(M) complexify(N).
CMatrix complexify(const QMatrix& m);

/// Eigenvalues of a real symmetric matrix (row-major, size n) by cyclic Jacobi
/// sweeps; off-diagonal threshold 1e-13 relative, at most 100 sweeps.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

/// Eigenvalues of a Hermitian quaternionic matrix, via the real symmetric
/// embedding of its complexification (each true eigenvalue appears with
/// multiplicity four). Sorted ascending.
std::vector<double> hermitian_eigenvalues(const QMatrix& m);

/// True iff all eigenvalues of complexify(m) are >= -tol. Raises NotHermitian
/// when any entry of m - m* exceeds tol in modulus.
bool is_psd(const QMatrix& m, double tol);

/// Closed-form f(I_3 - v* v) for a 1x3 row v with s = (v v*)_00 in [0, 1):
/// f(1) I_3 + ((f(1-s) - f(1))/s) v* v, and f(1) I_3 when s = 0.
QMatrix rank1_spectral(const QMatrix& v, const std::function<double(double)>& f);

}  // namespace vqf
