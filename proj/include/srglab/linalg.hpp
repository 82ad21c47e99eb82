#pragma once

#include <cmath>
#include <vector>

#include "errors.hpp"

namespace srglab::detail {

// Row-major dense matrix, just enough for the eigensolver and the SDP.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    int rows() const { return r_; }
    int cols() const { return c_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

private:
    int r_ = 0, c_ = 0;
    std::vector<double> a_;
};

inline Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline double frob_inner(const Mat& a, const Mat& b) {
    double s = 0.0;
    const double* pa = a.data();
    const double* pb = b.data();
    const size_t total = static_cast<size_t>(a.rows()) * a.cols();
    for (size_t k = 0; k < total; ++k) s += pa[k] * pb[k];
    return s;
}

inline double trace(const Mat& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i) s += a(i, i);
    return s;
}

inline Mat multiply(const Mat& a, const Mat& b) {
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline void symmetrize(Mat& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
}

inline double offdiag_frobenius(const Mat& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

// Cyclic Jacobi eigenvalue iteration on a symmetric matrix. Deterministic and
// dependency-free; quadratic convergence makes the absolute off-diagonal
// target reachable in well under the sweep budget for the sizes used here.
inline std::vector<double> jacobi_eigenvalues(Mat a, double off_target = 1e-12,
                                              int max_sweeps = 100) {
    const int n = a.rows();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_frobenius(a) < off_target) break;
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double app = a(p, p), aqq = a(q, q);
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = a(p, r) = c * arp - s * arq;
                    a(r, q) = a(q, r) = s * arp + c * arq;
                }
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
            }
        if (!rotated) break;
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a(i, i);
    return eig;
}

// In-place lower Cholesky; returns false when the matrix is not positive
// definite (used as the PD test in the interior-point line search).
inline bool cholesky_in_place(Mat& a) {
    const int n = a.rows();
    for (int j = 0; j < n; ++j) {
        double d = a(j, j);
        for (int k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        const double ld = std::sqrt(d);
        a(j, j) = ld;
        for (int i = j + 1; i < n; ++i) {
            double v = a(i, j);
            for (int k = 0; k < j; ++k) v -= a(i, k) * a(j, k);
            a(i, j) = v / ld;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a(i, j) = 0.0;
    return true;
}

inline bool is_positive_definite(const Mat& a) {
    Mat c = a;
    return cholesky_in_place(c);
}

// Solve (L L^T) x = b given the Cholesky factor.
inline std::vector<double> cholesky_solve(const Mat& l, std::vector<double> b) {
    const int n = l.rows();
    for (int i = 0; i < n; ++i) {
        double v = b[i];
        for (int k = 0; k < i; ++k) v -= l(i, k) * b[k];
        b[i] = v / l(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double v = b[i];
        for (int k = i + 1; k < n; ++k) v -= l(k, i) * b[k];
        b[i] = v / l(i, i);
    }
    return b;
}

// Symmetric inverse through the Cholesky factor.
inline Mat cholesky_inverse(const Mat& l) {
    const int n = l.rows();
    // invert L by forward substitution, column by column
    Mat linv(n, n);
    for (int j = 0; j < n; ++j) {
        linv(j, j) = 1.0 / l(j, j);
        for (int i = j + 1; i < n; ++i) {
            double v = 0.0;
            for (int k = j; k < i; ++k) v -= l(i, k) * linv(k, j);
            linv(i, j) = v / l(i, i);
        }
    }
    // (L L^T)^{-1} = L^{-T} L^{-1}
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = 0.0;
            for (int k = i; k < n; ++k) v += linv(k, i) * linv(k, j);
            out(i, j) = v;
            out(j, i) = v;
        }
    return out;
}

} // namespace srglab::detail
