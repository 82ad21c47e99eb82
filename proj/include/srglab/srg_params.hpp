#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace srglab {

// Parameter tuple (n, d, lambda, mu) of a strongly regular graph:
// n vertices, degree d, lambda common neighbors across an edge,
// mu common neighbors across a non-edge.
struct SrgParams {
    long long n = 0;
    long long d = 0;
    long long lambda = 0;
    long long mu = 0;

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

inline void validate(const SrgParams& p) {
    if (p.n < 2 || p.d < 1 || p.d > p.n - 1 || p.lambda < 0 || p.lambda > p.d ||
        p.mu < 0 || p.mu > p.d) {
        throw InvalidParams("srg parameters out of range: (" + std::to_string(p.n) + "," +
                            std::to_string(p.d) + "," + std::to_string(p.lambda) + "," +
                            std::to_string(p.mu) + ")");
    }
}

// t^2 = (mu - lambda)^2 + 4(d - mu); t is the spectral gap p1 - p2 between the
// two restricted eigenvalues. Always a nonnegative integer for valid ranges.
inline long long t_squared(const SrgParams& p) {
    const long long g = p.mu - p.lambda;
    return g * g + 4 * (p.d - p.mu);
}

inline double srg_t(const SrgParams& p) {
    return std::sqrt(static_cast<double>(t_squared(p)));
}

// Exact integer square root (floor).
inline long long isqrt_ll(long long x) {
    if (x < 0) return -1;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline bool t_is_integer(const SrgParams& p) {
    const long long t2 = t_squared(p);
    const long long s = isqrt_ll(t2);
    return s * s == t2;
}

// Complement map: a graph is srg(n,d,lambda,mu) iff its complement is
// srg(n, n-d-1, n-2d+mu-2, n-2d+lambda). Involutive.
inline SrgParams complement_params(const SrgParams& p) {
    validate(p);
    SrgParams c{p.n, p.n - p.d - 1, p.n - 2 * p.d + p.mu - 2, p.n - 2 * p.d + p.lambda};
    if (c.d < 0 || c.lambda < 0 || c.mu < 0) {
        throw NegativeParameter("complement parameters have a negative entry for (" +
                                std::to_string(p.n) + "," + std::to_string(p.d) + "," +
                                std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")");
    }
    return c;
}

inline std::string to_string(const SrgParams& p) {
    return "(" + std::to_string(p.n) + "," + std::to_string(p.d) + "," +
           std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

} // namespace srglab
