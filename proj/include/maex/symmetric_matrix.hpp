#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <vector>

#include "maex/errors.hpp"

namespace maex {

/// Eigendecomposition of a symmetric matrix: eigenvalues ascending,
/// eigenvectors stored column-major (column j pairs with eigenvalues[j]).
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<double> vectors;  // n*n, vectors[i + n*j] = V(i,j)
    int n = 0;

    double vec(int i, int j) const { return vectors[i + static_cast<std::size_t>(n) * j]; }
};

/// Dense symmetric n x n matrix, packed upper triangle (row-major).
/// The spectral decomposition is computed on demand by cyclic Jacobi
/// rotations and cached; all mutation drops the cache.
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(packed_size(n), 0.0) {
        if (n < 2)
            throw DimensionError("SymMatrix: dimension must be >= 2, got " + std::to_string(n));
    }

    static SymMatrix identity(int n) {
        SymMatrix m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
        return m;
    }

    static SymMatrix diagonal(const std::vector<double>& d) {
        SymMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m.set(i, i, d[i]);
        return m;
    }

    /// Build from a dense row-major n x n array; the strict lower triangle is ignored.
    static SymMatrix from_dense(int n, const std::vector<double>& dense) {
        SymMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, dense[i * n + j]);
        return m;
    }

    int dim() const { return n_; }

    double operator()(int i, int j) const { return a_[index(i, j)]; }

    void set(int i, int j, double v) {
        a_[index(i, j)] = v;
        spectrum_.reset();
    }

    const std::vector<double>& packed() const { return a_; }

    std::vector<double> dense() const {
        std::vector<double> d(static_cast<std::size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) d[i * n_ + j] = (*this)(i, j);
        return d;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    std::vector<double> apply(const std::vector<double>& x) const {
        std::vector<double> y(n_, 0.0);
        for (int i = 0; i < n_; ++i) {
            double s = 0.0;
            for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    double quadratic_form(const std::vector<double>& x) const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) {
            s += (*this)(i, i) * x[i] * x[i];
            for (int j = i + 1; j < n_; ++j) s += 2.0 * (*this)(i, j) * x[i] * x[j];
        }
        return s;
    }

    double trace() const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    SymMatrix& operator+=(const SymMatrix& o) {
        check_same_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        spectrum_.reset();
        return *this;
    }

    SymMatrix& operator-=(const SymMatrix& o) {
        check_same_dim(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        spectrum_.reset();
        return *this;
    }

    SymMatrix& operator*=(double s) {
        for (double& v : a_) v *= s;
        spectrum_.reset();
        return *this;
    }

    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(SymMatrix a, double s) { return a *= s; }
    friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

    /// Eigendecomposition; cached after the first call.
    const Spectrum& spectrum() const {
        if (!spectrum_)
            spectrum_ = std::make_shared<const Spectrum>(jacobi());
        return *spectrum_;
    }

    double min_eigenvalue() const { return spectrum().eigenvalues.front(); }
    double max_eigenvalue() const { return spectrum().eigenvalues.back(); }

private:
    static std::size_t packed_size(int n) {
        return static_cast<std::size_t>(n) * (n + 1) / 2;
    }

    // row-major packed upper triangle: (i,j) with i<=j at offset i*n - i(i-1)/2 ... linear scan form
    std::size_t index(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
               (j - i);
    }

    void check_same_dim(const SymMatrix& o) const {
        if (o.n_ != n_)
            throw DimensionError("SymMatrix: dimension mismatch");
    }

    /// Cyclic Jacobi on a dense working copy; converges when the off-diagonal
    /// Frobenius mass drops below 1e-14 * ||M||_F. Adequate for the small
    /// dense matrices this toolkit handles (n <= 16).
    Spectrum jacobi() const {
        const int n = n_;
        std::vector<double> m = dense();
        std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) v[i + static_cast<std::size_t>(n) * i] = 1.0;

        const double fnorm = std::max(frobenius_norm(), 1e-300);
        auto off = [&]() {
            double s = 0.0;
            for (int p = 0; p < n; ++p)
                for (int q = p + 1; q < n; ++q) s += 2.0 * m[p * n + q] * m[p * n + q];
            return std::sqrt(s);
        };

        for (int sweep = 0; sweep < 64 && off() > 1e-14 * fnorm; ++sweep) {
            for (int p = 0; p < n; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    double apq = m[p * n + q];
                    if (std::abs(apq) <= 1e-300)
                        continue;
                    double app = m[p * n + p], aqq = m[q * n + q];
                    double theta = 0.5 * (aqq - app) / apq;
                    double t = std::copysign(1.0, theta) /
                               (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    double c = 1.0 / std::sqrt(1.0 + t * t);
                    double s = t * c;
                    for (int k = 0; k < n; ++k) {
                        double mkp = m[k * n + p], mkq = m[k * n + q];
                        m[k * n + p] = c * mkp - s * mkq;
                        m[k * n + q] = s * mkp + c * mkq;
                    }
                    for (int k = 0; k < n; ++k) {
                        double mpk = m[p * n + k], mqk = m[q * n + k];
                        m[p * n + k] = c * mpk - s * mqk;
                        m[q * n + k] = s * mpk + c * mqk;
                    }
                    for (int k = 0; k < n; ++k) {
                        double vkp = v[k + static_cast<std::size_t>(n) * p];
                        double vkq = v[k + static_cast<std::size_t>(n) * q];
                        v[k + static_cast<std::size_t>(n) * p] = c * vkp - s * vkq;
                        v[k + static_cast<std::size_t>(n) * q] = s * vkp + c * vkq;
                    }
                }
            }
        }

        Spectrum sp;
        sp.n = n;
        sp.eigenvalues.resize(n);
        for (int i = 0; i < n; ++i) sp.eigenvalues[i] = m[i * n + i];
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return sp.eigenvalues[a] < sp.eigenvalues[b];
        });
        Spectrum out;
        out.n = n;
        out.eigenvalues.resize(n);
        out.vectors.resize(static_cast<std::size_t>(n) * n);
        for (int j = 0; j < n; ++j) {
            out.eigenvalues[j] = sp.eigenvalues[order[j]];
            for (int i = 0; i < n; ++i)
                out.vectors[i + static_cast<std::size_t>(n) * j] =
                    v[i + static_cast<std::size_t>(n) * order[j]];
        }
        return out;
    }

    int n_;
    std::vector<double> a_;
    mutable std::shared_ptr<const Spectrum> spectrum_;
};

/// V diag(phi(lambda_i)) V^T for a scalar function of the eigenvalues.
inline SymMatrix map_spectrum(const SymMatrix& m, const std::function<double(double)>& phi) {
    const Spectrum& sp = m.spectrum();
    const int n = sp.n;
    std::vector<double> phiv(n);
    for (int i = 0; i < n; ++i) phiv[i] = phi(sp.eigenvalues[i]);
    SymMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += sp.vec(i, k) * phiv[k] * sp.vec(j, k);
            out.set(i, j, s);
        }
    }
    return out;
}

inline SymMatrix spd_inverse(const SymMatrix& m) {
    if (m.min_eigenvalue() <= 0.0)
        throw NotSPDError("spd_inverse: matrix is not positive definite");
    return map_spectrum(m, [](double l) { return 1.0 / l; });
}

inline SymMatrix spd_sqrt(const SymMatrix& m) {
    if (m.min_eigenvalue() <= 0.0)
        throw NotSPDError("spd_sqrt: matrix is not positive definite");
    return map_spectrum(m, [](double l) { return std::sqrt(l); });
}

/// N with N*N = M^{-1}; N symmetric positive definite.
inline SymMatrix spd_inv_sqrt(const SymMatrix& m) {
    if (m.min_eigenvalue() <= 0.0)
        throw NotSPDError("spd_inv_sqrt: matrix is not positive definite");
    return map_spectrum(m, [](double l) { return 1.0 / std::sqrt(l); });
}

}  // namespace maex
