#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "linalg.hpp"
#include "srg_params.hpp"

namespace srglab {

inline constexpr int kEigenOrderCap = 2000;
inline constexpr double kEigenMergeGap = 1e-6;

struct EigenEntry {
    double value = 0.0;
    long long multiplicity = 0;

    friend bool operator==(const EigenEntry&, const EigenEntry&) = default;
};

// Eigenvalues in decreasing order with multiplicities; near-equal numeric
// values (gap below 1e-6) are merged into one entry.
struct Spectrum {
    std::vector<EigenEntry> entries;

    long long order() const {
        long long s = 0;
        for (const auto& e : entries) s += e.multiplicity;
        return s;
    }

    // expand into a decreasing list, one value per repetition
    std::vector<double> expanded() const {
        std::vector<double> out;
        out.reserve(static_cast<size_t>(order()));
        for (const auto& e : entries)
            for (long long k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
        return out;
    }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

namespace detail {
inline Spectrum merge_sorted_eigenvalues(std::vector<double> vals, double gap) {
    std::sort(vals.begin(), vals.end(), std::greater<>());
    Spectrum sp;
    for (double v : vals) {
        if (!sp.entries.empty() && sp.entries.back().value - v < gap) {
            auto& e = sp.entries.back();
            // running mean keeps the merged representative centered
            e.value = (e.value * static_cast<double>(e.multiplicity) + v) /
                      static_cast<double>(e.multiplicity + 1);
            e.multiplicity += 1;
        } else {
            sp.entries.push_back({v, 1});
        }
    }
    return sp;
}
} // namespace detail

inline Spectrum eigenvalues(const Graph& g) {
    if (g.order() > kEigenOrderCap)
        throw TooLarge("eigensolver capped at order " + std::to_string(kEigenOrderCap));
    const int n = g.order();
    detail::Mat a(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) a(u, v) = a(v, u) = 1.0;
    return detail::merge_sorted_eigenvalues(detail::jacobi_eigenvalues(std::move(a)),
                                            kEigenMergeGap);
}

// Closed-form SRG spectrum. Connected case (mu > 0):
//   p_{1,2} = ((lambda - mu) +- t) / 2,
//   m_{1,2} = (n - 1 -+ (2d + (n-1)(lambda - mu)) / t) / 2.
// mu = 0 is accepted only for the disconnected family (mr, r-1, r-2, 0),
// a union of m copies of K_r, whose spectrum is {(r-1)^[m], (-1)^[m(r-1)]}.
inline Spectrum srg_spectrum(const SrgParams& p) {
    validate(p);
    if (p.mu == 0) {
        const long long r = p.d + 1;
        if (p.lambda != p.d - 1 || p.n % r != 0 || p.n / r < 2)
            throw InfeasibleParams("mu = 0 requires a union of equal complete graphs, got " +
                                   to_string(p));
        const long long m = p.n / r;
        return Spectrum{{{static_cast<double>(r - 1), m}, {-1.0, m * (r - 1)}}};
    }
    const long long t2 = t_squared(p);
    if (t2 <= 0) throw InfeasibleParams("t = 0 for " + to_string(p));
    const double t = std::sqrt(static_cast<double>(t2));
    const double diff = static_cast<double>(p.lambda - p.mu);
    const double p1 = (diff + t) / 2.0;
    const double p2 = (diff - t) / 2.0;
    const double split = (2.0 * static_cast<double>(p.d) +
                          static_cast<double>(p.n - 1) * diff) / t;
    const double m1 = (static_cast<double>(p.n - 1) - split) / 2.0;
    const double m2 = (static_cast<double>(p.n - 1) + split) / 2.0;
    const double r1 = std::round(m1), r2 = std::round(m2);
    if (std::abs(m1 - r1) > 1e-9 || std::abs(m2 - r2) > 1e-9 || r1 < 0 || r2 < 0)
        throw InfeasibleParams("non-integer eigenvalue multiplicities for " + to_string(p));
    Spectrum sp;
    sp.entries.push_back({static_cast<double>(p.d), 1});
    if (static_cast<long long>(r1) > 0) sp.entries.push_back({p1, static_cast<long long>(r1)});
    if (static_cast<long long>(r2) > 0) sp.entries.push_back({p2, static_cast<long long>(r2)});
    // d can coincide with p1 only in degenerate families; keep entries sorted
    std::sort(sp.entries.begin(), sp.entries.end(),
              [](const EigenEntry& a, const EigenEntry& b) { return a.value > b.value; });
    return sp;
}

inline double energy(const Spectrum& sp) {
    double s = 0.0;
    for (const auto& e : sp.entries) s += std::abs(e.value) * static_cast<double>(e.multiplicity);
    return s;
}

inline double energy(const Graph& g) { return energy(eigenvalues(g)); }

// Closed-form SRG energy: E = d (1 + (2(n-d) + lambda - mu) / t).
inline double srg_energy(const SrgParams& p) {
    validate(p);
    const long long t2 = t_squared(p);
    if (t2 <= 0) throw InfeasibleParams("t = 0 for " + to_string(p));
    const double t = std::sqrt(static_cast<double>(t2));
    return static_cast<double>(p.d) *
           (1.0 + (2.0 * static_cast<double>(p.n - p.d) + static_cast<double>(p.lambda - p.mu)) / t);
}

// Upper bound on graph energy at order n, attained only by the max-energy family.
inline double max_energy_bound(long long n) {
    if (n < 1) throw DomainTooSmall("max_energy_bound needs n >= 1");
    return static_cast<double>(n) * (std::sqrt(static_cast<double>(n)) + 1.0) / 2.0;
}

// Equality holds only for srg(n, (n+sqrt n)/2, (n+2 sqrt n)/4, (n+2 sqrt n)/4).
// Empty when the entries are not integers or the parameters degenerate to a
// complete graph (d = n-1, the n = 4 case).
inline std::optional<SrgParams> max_energy_params(long long n) {
    if (n < 1) throw DomainTooSmall("max_energy_params needs n >= 1");
    const long long s = isqrt_ll(n);
    if (s * s != n) return std::nullopt;
    if ((n + s) % 2 != 0 || (n + 2 * s) % 4 != 0) return std::nullopt;
    const SrgParams p{n, (n + s) / 2, (n + 2 * s) / 4, (n + 2 * s) / 4};
    if (p.d >= p.n - 1 || p.d < 1) return std::nullopt;
    return p;
}

// Cauchy interlacing test: child spectrum must interlace the parent's,
// with 1e-9 numeric slack.
inline bool check_interlacing(const Spectrum& parent, const Spectrum& child) {
    const auto pv = parent.expanded();
    const auto cv = child.expanded();
    const size_t n = pv.size(), m = cv.size();
    if (m > n) throw OrderMismatch("interlacing: child spectrum larger than parent");
    constexpr double slack = 1e-9;
    for (size_t i = 0; i < m; ++i) {
        if (cv[i] > pv[i] + slack) return false;
        if (cv[i] < pv[n - m + i] - slack) return false;
    }
    return true;
}

} // namespace srglab
