#include "vqf/qmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace vqf {

double QMatrix::frobenius_norm() const { return std::sqrt(frobenius_norm_sq()); }

double QMatrix::max_entry_norm() const {
    double m = 0.0;
    for (const auto& q : data_) m = std::max(m, q.norm());
    return m;
}

static void check_same_shape(const QMatrix& a, const QMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch(std::string("qmatrix ") + what + ": shape mismatch");
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    check_same_shape(a, b, "add");
    QMatrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    check_same_shape(a, b, "sub");
    QMatrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
    return c;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("qmatrix mul: inner dimensions differ");
    QMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int l = 0; l < a.cols_; ++l) {
            const Quaternion& ail = a.at(i, l);
            if (ail.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) c.at(i, j) += ail * b.at(l, j);
        }
    return c;
}

QMatrix operator*(double a, const QMatrix& m) {
    QMatrix c(m.rows_, m.cols_);
    for (size_t k = 0; k < m.data_.size(); ++k) c.data_[k] = a * m.data_[k];
    return c;
}

QMatrix QMatrix::solve(const QMatrix& rhs) const {
    if (rows_ != cols_) throw ShapeMismatch("solve: matrix not square");
    if (rhs.rows() != rows_) throw ShapeMismatch("solve: rhs row count mismatch");
    const int n = rows_;
    QMatrix a = *this;
    QMatrix y = rhs;

    for (int k = 0; k < n; ++k) {
        // partial pivoting on the quaternion modulus
        int piv = k;
        double best = a.at(k, k).norm();
        for (int i = k + 1; i < n; ++i) {
            const double v = a.at(i, k).norm();
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        double row_norm = 0.0;
        for (int j = 0; j < n; ++j) row_norm += a.at(piv, j).norm_sq();
        row_norm = std::sqrt(row_norm);
        if (best <= 1e-12 * row_norm || row_norm == 0.0)
            throw SingularPencil("solve: pivot below threshold");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            for (int j = 0; j < y.cols(); ++j) std::swap(y.at(k, j), y.at(piv, j));
        }
        // entries do not commute: row operations multiply from the left
        const Quaternion inv_piv = a.at(k, k).inverse();
        for (int i = k + 1; i < n; ++i) {
            const Quaternion factor = a.at(i, k) * inv_piv;
            if (factor.is_zero()) continue;
            for (int j = k; j < n; ++j) a.at(i, j) -= factor * a.at(k, j);
            for (int j = 0; j < y.cols(); ++j) y.at(i, j) -= factor * y.at(k, j);
        }
    }
    // back substitution
    QMatrix out(n, rhs.cols());
    for (int i = n - 1; i >= 0; --i) {
        const Quaternion inv_diag = a.at(i, i).inverse();
        for (int j = 0; j < rhs.cols(); ++j) {
            Quaternion acc = y.at(i, j);
            for (int l = i + 1; l < n; ++l) acc -= a.at(i, l) * out.at(l, j);
            out.at(i, j) = inv_diag * acc;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int l = 0; l < a.cols; ++l) {
            const auto ail = a.at(i, l);
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += ail * b.at(l, j);
        }
    return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows, a.cols);
    for (size_t k = 0; k < a.data.size(); ++k) c.data[k] = a.data[k] - b.data[k];
    return c;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data) m = std::max(m, std::abs(v));
    return m;
}

CMatrix complexify(const QMatrix& m) {
    CMatrix z(2 * m.rows(), 2 * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Quaternion& q = m.at(i, j);
            const std::complex<double> a(q.w, q.x);
            const std::complex<double> b(q.y, q.z);
            z.at(2 * i, 2 * j) = a;
            z.at(2 * i, 2 * j + 1) = b;
            z.at(2 * i + 1, 2 * j) = -std::conj(b);
            z.at(2 * i + 1, 2 * j + 1) = std::conj(a);
        }
    return z;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    constexpr double kSweepThreshold = 1e-13;
    constexpr int kMaxSweeps = 100;
    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };

    double fro = 0.0;
    for (double v : a) fro += v * v;
    fro = std::sqrt(fro);
    const double stop = kSweepThreshold * std::max(fro, 1.0);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * a[idx(p, q)] * a[idx(p, q)];
        if (std::sqrt(off) < stop) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[idx(p, q)];
                if (apq == 0.0) continue;
                const double theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[idx(k, p)];
                    const double akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[idx(p, k)];
                    const double aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[idx(i, i)];
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> hermitian_eigenvalues(const QMatrix& m) {
    const CMatrix z = complexify(m);
    const int n = z.rows;
    // real symmetric embedding [[Re, -Im], [Im, Re]] of the Hermitian z
    std::vector<double> r(static_cast<size_t>(2 * n) * (2 * n));
    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * 2 * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto v = z.at(i, j);
            r[idx(i, j)] = v.real();
            r[idx(i, j + n)] = -v.imag();
            r[idx(i + n, j)] = v.imag();
            r[idx(i + n, j + n)] = v.real();
        }
    return jacobi_eigenvalues(std::move(r), 2 * n);
}

bool is_psd(const QMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw ShapeMismatch("is_psd: matrix not square");
    const QMatrix asym = m - m.adjoint();
    if (asym.max_entry_norm() > tol)
        throw NotHermitian("is_psd: asymmetry exceeds tolerance");
    const auto eig = hermitian_eigenvalues(m);
    return eig.empty() || eig.front() >= -tol;
}

QMatrix rank1_spectral(const QMatrix& v, const std::function<double(double)>& f) {
    if (v.rows() != 1 || v.cols() != 3) throw ShapeMismatch("rank1_spectral: expected a 1x3 row");
    const Quaternion ss = (v * v.adjoint()).at(0, 0);
    const double s = ss.w;
    constexpr double kTol = 1e-12;
    if (s < -kTol || s >= 1.0) throw DomainError("rank1_spectral: v v* outside [0, 1)");
    if (s <= 0.0) return f(1.0) * QMatrix::identity(3);
    // I_3 - v* v has eigenvalues {1, 1, 1-s}; spectral projection onto the
    // 1-s eigenvalue is v* v / s.
    return f(1.0) * QMatrix::identity(3) + ((f(1.0 - s) - f(1.0)) / s) * (v.adjoint() * v);
}

}  // namespace vqf
