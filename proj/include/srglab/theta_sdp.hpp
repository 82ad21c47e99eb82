#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "linalg.hpp"

namespace srglab {

inline constexpr int kSdpOrderCap = 64;
inline constexpr int kSdpIterationBudget = 500;

struct ThetaSdpResult {
    double value = 0.0;         // midpoint of the final primal/dual objectives
    double duality_gap = 0.0;   // dual minus primal at termination
    double primal_residual = 0.0; // max |X_ij| over edges plus |tr X - 1|
    int iterations = 0;
};

// Lovasz theta by a primal-dual interior-point method on
//   max <J, X>  s.t.  X_ij = 0 on edges, tr X = 1, X psd.
// One linear constraint per edge plus the trace constraint; each Newton step
// solves an (|E|+1)-dimensional system. The primal iterate stays feasible, so
// the dual objective upper-bounds theta and the primal objective lower-bounds
// it; we stop once the gap is below tol and report the midpoint.
inline ThetaSdpResult theta_sdp(const Graph& g, double tol = 1e-8,
                                int max_iter = kSdpIterationBudget) {
    if (g.order() > kSdpOrderCap)
        throw TooLarge("sdp solver capped at order " + std::to_string(kSdpOrderCap));
    if (!(tol >= 1e-10 && tol <= 1e-2))
        throw InvalidParams("sdp tolerance must lie in [1e-10, 1e-2]");
    if (max_iter < 1) throw InvalidParams("sdp iteration budget must be positive");

    const int n = g.order();
    const auto edges = g.edges();
    const int m1 = static_cast<int>(edges.size());
    const int m = m1 + 1; // edge constraints + trace constraint

    detail::Mat x(n, n), z(n, n);
    for (int i = 0; i < n; ++i) x(i, i) = 1.0 / n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = (i == j ? static_cast<double>(n) : -1.0);
    std::vector<double> y(m, 0.0);
    y[m - 1] = n + 1.0;

    auto primal_objective = [&] {
        double s = 0.0;
        const double* p = x.data();
        for (int k = 0; k < n * n; ++k) s += p[k];
        return s;
    };
    auto primal_residual = [&] {
        double r = std::abs(detail::trace(x) - 1.0);
        for (auto [i, j] : edges) r = std::max(r, std::abs(x(i, j)));
        return r;
    };

    double mu = detail::frob_inner(x, z) / (2.0 * n);
    double phi = y[m - 1];
    double psi = primal_objective();

    for (int iter = 1; iter <= max_iter; ++iter) {
        if (phi - psi <= tol)
            return {0.5 * (phi + psi), phi - psi, primal_residual(), iter - 1};

        detail::Mat zfac = z;
        if (!detail::cholesky_in_place(zfac))
            throw NotConverged("dual iterate lost positive definiteness");
        detail::Mat zi = detail::cholesky_inverse(zfac);
        detail::symmetrize(zi);

        const detail::Mat zx = detail::multiply(zi, x);

        // Newton system for dy: M dy = mu * A(Zi) - b
        detail::Mat msys(m, m);
        for (int k = 0; k < m1; ++k) {
            const auto [i, j] = edges[k];
            for (int l = k; l < m1; ++l) {
                const auto [a, c] = edges[l];
                const double v = zi(i, a) * x(j, c) + zi(i, c) * x(j, a) +
                                 zi(j, a) * x(i, c) + zi(j, c) * x(i, a);
                msys(k, l) = v;
                msys(l, k) = v;
            }
            const double v = zx(i, j) + zx(j, i);
            msys(k, m - 1) = v;
            msys(m - 1, k) = v;
        }
        msys(m - 1, m - 1) = detail::frob_inner(zi, x);

        std::vector<double> rhs(m);
        for (int k = 0; k < m1; ++k) rhs[k] = mu * 2.0 * zi(edges[k].first, edges[k].second);
        rhs[m - 1] = mu * detail::trace(zi) - 1.0;

        detail::Mat mfac = msys;
        double ridge = 0.0;
        while (!detail::cholesky_in_place(mfac)) {
            ridge = (ridge == 0.0 ? 1e-12 : ridge * 100.0);
            if (ridge > 1e-2) throw NotConverged("newton system not positive definite");
            mfac = msys;
            for (int k = 0; k < m; ++k) mfac(k, k) += ridge;
        }
        const std::vector<double> dy = detail::cholesky_solve(mfac, rhs);

        detail::Mat dz(n, n);
        for (int k = 0; k < m1; ++k) {
            const auto [i, j] = edges[k];
            dz(i, j) += dy[k];
            dz(j, i) += dy[k];
        }
        for (int i = 0; i < n; ++i) dz(i, i) += dy[m - 1];

        // dX = mu Zi - X - Zi dZ X, symmetrized
        detail::Mat dx = detail::multiply(zi, detail::multiply(dz, x));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dx(i, j) = mu * zi(i, j) - x(i, j) - dx(i, j);
        detail::symmetrize(dx);

        auto step_limit = [&](const detail::Mat& base, const detail::Mat& dir) {
            double alpha = 1.0;
            while (alpha > 1e-14) {
                detail::Mat trial = base;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) trial(i, j) += alpha * dir(i, j);
                if (detail::is_positive_definite(trial)) break;
                alpha *= 0.8;
            }
            return alpha < 1.0 ? alpha * 0.95 : alpha;
        };
        const double alpha_p = step_limit(x, dx);
        const double alpha_d = step_limit(z, dz);

        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                x(i, j) += alpha_p * dx(i, j);
                z(i, j) += alpha_d * dz(i, j);
            }
        for (int k = 0; k < m; ++k) y[k] += alpha_d * dy[k];

        mu = detail::frob_inner(x, z) / (2.0 * n);
        if (alpha_p + alpha_d > 1.8) mu /= 2.0;

        phi = y[m - 1];
        psi = primal_objective();
    }
    if (phi - psi <= tol)
        return {0.5 * (phi + psi), phi - psi, primal_residual(), max_iter};
    throw NotConverged("sdp gap " + std::to_string(phi - psi) + " above tolerance after " +
                       std::to_string(max_iter) + " iterations");
}

} // namespace srglab
