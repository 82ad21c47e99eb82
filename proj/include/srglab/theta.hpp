#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "errors.hpp"
#include "srg_params.hpp"

namespace srglab {

enum class ThetaMethod { srg_closed_form, regular_eig_bounds, cycle_formula, sdp };

inline const char* to_string(ThetaMethod m) {
    switch (m) {
        case ThetaMethod::srg_closed_form: return "srg-closed-form";
        case ThetaMethod::regular_eig_bounds: return "regular-eig-bounds";
        case ThetaMethod::cycle_formula: return "cycle-formula";
        case ThetaMethod::sdp: return "sdp";
    }
    return "unknown";
}

struct ThetaBounds {
    double lower = 1.0;
    double upper = 1.0;
    std::optional<double> exact;
    ThetaMethod method = ThetaMethod::regular_eig_bounds;
};

namespace detail {
inline double srg_t_checked(const SrgParams& p) {
    validate(p);
    const long long t2 = t_squared(p);
    if (t2 <= 0) throw InfeasibleParams("t = 0 for " + to_string(p));
    return std::sqrt(static_cast<double>(t2));
}
} // namespace detail

// Lovasz number of a strongly regular graph:
//   theta(G) = n (t + mu - lambda) / (2d + t + mu - lambda).
// For valid parameters with t > 0 the denominator terms are positive.
inline double theta_srg(const SrgParams& p) {
    const double t = detail::srg_t_checked(p);
    const double gap = t + static_cast<double>(p.mu - p.lambda);
    return static_cast<double>(p.n) * gap / (2.0 * static_cast<double>(p.d) + gap);
}

// theta of the complement, theta(G-bar) = 1 + 2d / (t + mu - lambda).
inline double theta_srg_complement(const SrgParams& p) {
    const double t = detail::srg_t_checked(p);
    const double gap = t + static_cast<double>(p.mu - p.lambda);
    return 1.0 + 2.0 * static_cast<double>(p.d) / gap;
}

// Residual of the product identity theta(G) theta(G-bar) = n.
inline double product_identity_check(const SrgParams& p) {
    return theta_srg(p) * theta_srg_complement(p) - static_cast<double>(p.n);
}

// For srg(n,k,1,1) (the friendship-candidate family): theta(G-bar) = 1 + k/sqrt(k-1),
// which exceeds 3 for every k >= 3 and is integral for no such k.
inline double theta_friendship_family(long long k) {
    if (k < 3) throw DomainTooSmall("friendship family formula needs k >= 3");
    return 1.0 + static_cast<double>(k) / std::sqrt(static_cast<double>(k - 1));
}

// srg(n,d,l,l) generalization: theta(G-bar) = 1 + d/sqrt(d-l) and
// theta(G) = n sqrt(d-l) / (d + sqrt(d-l)).
inline double theta_ell_complement(long long d, long long ell) {
    if (ell < 1 || d <= ell) throw DomainTooSmall("needs d > ell >= 1");
    return 1.0 + static_cast<double>(d) / std::sqrt(static_cast<double>(d - ell));
}

inline double theta_ell(long long n, long long d, long long ell) {
    if (ell < 1 || d <= ell) throw DomainTooSmall("needs d > ell >= 1");
    const double root = std::sqrt(static_cast<double>(d - ell));
    return static_cast<double>(n) * root / (static_cast<double>(d) + root);
}

struct RegularThetaBounds {
    ThetaBounds graph;
    ThetaBounds complement;
};

// Eigenvalue bounds for a d-regular graph with second eigenvalue lambda2 and
// least eigenvalue lambda_min:
//   (n - d + lambda2)/(1 + lambda2) <= theta(G) <= -n lambda_min/(d - lambda_min)
//   1 - d/lambda_min <= theta(G-bar) <= n (1 + lambda2)/(n - d + lambda2)
// Both collapse to equalities on strongly regular graphs.
inline RegularThetaBounds theta_regular_bounds(long long n, long long d, double lambda2,
                                               double lambda_min) {
    if (n < 2 || d < 1 || d > n - 2)
        throw DegenerateGraph("regular theta bounds need 1 <= d <= n-2");
    if (!(lambda2 > -1.0) || !(lambda_min < 0.0))
        throw DegenerateGraph("regular theta bounds need lambda2 > -1 and lambda_min < 0");
    RegularThetaBounds out;
    out.graph.lower = (static_cast<double>(n - d) + lambda2) / (1.0 + lambda2);
    out.graph.upper = -static_cast<double>(n) * lambda_min / (static_cast<double>(d) - lambda_min);
    out.graph.method = ThetaMethod::regular_eig_bounds;
    out.complement.lower = 1.0 - static_cast<double>(d) / lambda_min;
    out.complement.upper =
        static_cast<double>(n) * (1.0 + lambda2) / (static_cast<double>(n - d) + lambda2);
    out.complement.method = ThetaMethod::regular_eig_bounds;
    constexpr double tie = 1e-9;
    if (std::abs(out.graph.upper - out.graph.lower) <= tie)
        out.graph.exact = 0.5 * (out.graph.lower + out.graph.upper);
    if (std::abs(out.complement.upper - out.complement.lower) <= tie)
        out.complement.exact = 0.5 * (out.complement.lower + out.complement.upper);
    return out;
}

// theta of a cycle: len/2 for even length, len cos(pi/len)/(1 + cos(pi/len)) odd.
inline double theta_cycle(long long len) {
    if (len < 3) throw DomainTooSmall("cycle needs length >= 3");
    if (len % 2 == 0) return static_cast<double>(len) / 2.0;
    const double c = std::cos(std::numbers::pi / static_cast<double>(len));
    return static_cast<double>(len) * c / (1.0 + c);
}

} // namespace srglab
