#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "srg_params.hpp"
#include "theta.hpp"

namespace srglab {

inline constexpr int kCliqueOrderCap = 64;
inline constexpr int kChromaticOrderCap = 32;

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (u != v && g.has_edge(u, v)) adj[u] |= std::uint64_t{1} << v;
    return adj;
}

// Branch and bound max clique with a greedy-coloring bound. Candidates are
// colored greedily; processing them in decreasing color order lets
// size + color(v) <= best prune the branch.
class CliqueSolver {
public:
    explicit CliqueSolver(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

    int solve() {
        best_ = 0;
        const int n = static_cast<int>(adj_.size());
        const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        expand(all, 0);
        return best_;
    }

private:
    void expand(std::uint64_t cand, int size) {
        if (cand == 0) {
            best_ = std::max(best_, size);
            return;
        }
        // greedy coloring of the candidate set
        std::array<int, 64> order{}, color{};
        int cnt = 0, col = 0;
        std::uint64_t rest = cand;
        while (rest) {
            ++col;
            std::uint64_t avail = rest;
            while (avail) {
                const int v = std::countr_zero(avail);
                const std::uint64_t bit = std::uint64_t{1} << v;
                avail &= ~(adj_[v] | bit);
                rest &= ~bit;
                order[cnt] = v;
                color[cnt] = col;
                ++cnt;
            }
        }
        std::uint64_t live = cand;
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + color[i] <= best_) return;
            const int v = order[i];
            const std::uint64_t bit = std::uint64_t{1} << v;
            expand(live & adj_[v], size + 1);
            live &= ~bit;
        }
        best_ = std::max(best_, size);
    }

    std::vector<std::uint64_t> adj_;
    int best_ = 0;
};

} // namespace detail

inline int clique_number(const Graph& g) {
    if (g.order() > kCliqueOrderCap)
        throw TooLarge("clique search capped at order " + std::to_string(kCliqueOrderCap));
    return detail::CliqueSolver(detail::adjacency_masks(g)).solve();
}

inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

namespace detail {

// Exact k-colorability by DSATUR-ordered backtracking with the usual
// symmetry break (at most one brand-new color per step).
class ColorSolver {
public:
    ColorSolver(std::vector<std::uint64_t> adj, int k)
        : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), k_(k),
          vertex_color_(adj_.size(), -1), neighbor_colors_(adj_.size(), 0) {}

    bool solve() { return recurse(0, 0); }

private:
    bool recurse(int colored, int used) {
        if (colored == n_) return true;
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (vertex_color_[v] >= 0) continue;
            const int sat = std::popcount(neighbor_colors_[v]);
            const int deg = std::popcount(adj_[v]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (neighbor_colors_[pick] >> c & 1) continue;
            assign(pick, c);
            if (recurse(colored + 1, std::max(used, c + 1))) return true;
            unassign(pick, c);
        }
        return false;
    }

    void assign(int v, int c) {
        vertex_color_[v] = c;
        std::uint64_t nb = adj_[v];
        while (nb) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (vertex_color_[w] < 0) neighbor_colors_[w] |= std::uint32_t{1} << c;
        }
    }

    void unassign(int v, int c) {
        vertex_color_[v] = -1;
        std::uint64_t nb = adj_[v];
        while (nb) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (vertex_color_[w] < 0) {
                bool still = false;
                std::uint64_t nb2 = adj_[w];
                while (nb2) {
                    const int u = std::countr_zero(nb2);
                    nb2 &= nb2 - 1;
                    if (vertex_color_[u] == c) { still = true; break; }
                }
                if (!still) neighbor_colors_[w] &= ~(std::uint32_t{1} << c);
            }
        }
    }

    std::vector<std::uint64_t> adj_;
    int n_, k_;
    std::vector<int> vertex_color_;
    std::vector<std::uint32_t> neighbor_colors_;
};

inline int greedy_coloring_bound(const std::vector<std::uint64_t>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(adj[a]) > std::popcount(adj[b]);
    });
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v : order) {
        std::uint64_t forb = 0;
        std::uint64_t nb = adj[v];
        while (nb) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[w] >= 0) forb |= std::uint64_t{1} << color[w];
        }
        int c = 0;
        while (forb >> c & 1) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace detail

inline int chromatic_number(const Graph& g) {
    if (g.order() > kChromaticOrderCap)
        throw TooLarge("chromatic search capped at order " + std::to_string(kChromaticOrderCap));
    if (g.edge_count() == 0) return 1;
    auto adj = detail::adjacency_masks(g);
    int lo = clique_number(g);
    int hi = detail::greedy_coloring_bound(adj);
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (detail::ColorSolver(adj, mid).solve())
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

// ---- parameter-level bounds -------------------------------------------------

struct InvariantBounds {
    long long alpha_ub = 0;
    long long omega_ub = 0;
    long long chi_lb = 0;
    long long chi_complement_lb = 0;

    friend bool operator==(const InvariantBounds&, const InvariantBounds&) = default;
};

namespace detail {
inline long long floor_nudged(double x) { return static_cast<long long>(std::floor(x + 1e-9)); }
inline long long ceil_nudged(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }
} // namespace detail

// Sandwich-theorem bounds specialized by the SRG closed forms:
//   alpha <= floor(theta(G)), omega <= 1 + floor(2d/(t+mu-lambda)),
//   chi >= 1 + ceil(2d/(t+mu-lambda)), chi(G-bar) >= ceil(theta(G)).
// Integer arithmetic whenever t is integral, which covers every catalog family.
inline InvariantBounds srg_invariant_bounds(const SrgParams& p) {
    validate(p);
    const long long t2 = t_squared(p);
    if (t2 <= 0) throw InfeasibleParams("t = 0 for " + to_string(p));
    const long long s = isqrt_ll(t2);
    InvariantBounds out;
    if (s * s == t2) {
        const long long gap = s + p.mu - p.lambda; // positive when t > 0
        const long long num = p.n * gap;
        const long long den = 2 * p.d + gap;
        out.alpha_ub = num / den;
        out.chi_complement_lb = (num + den - 1) / den;
        out.omega_ub = 1 + (2 * p.d) / gap;
        out.chi_lb = 1 + (2 * p.d + gap - 1) / gap;
    } else {
        const double theta = theta_srg(p);
        const double ratio = 2.0 * static_cast<double>(p.d) /
                             (srg_t(p) + static_cast<double>(p.mu - p.lambda));
        out.alpha_ub = detail::floor_nudged(theta);
        out.chi_complement_lb = detail::ceil_nudged(theta);
        out.omega_ub = 1 + detail::floor_nudged(ratio);
        out.chi_lb = 1 + detail::ceil_nudged(ratio);
    }
    return out;
}

struct EllFriendshipBounds {
    double theta = 0.0;
    double theta_complement = 0.0;
    InvariantBounds bounds;
};

// srg(n,d,l,l) form of the bounds, driven by theta(G-bar) = 1 + d/sqrt(d-l)
// and theta(G) = n sqrt(d-l)/(d + sqrt(d-l)). Requires the friendship-style
// counting identity (n-1) l = d (d-1).
inline EllFriendshipBounds ell_friendship_bounds(long long n, long long d, long long ell) {
    if (ell < 1 || d <= ell) throw DomainTooSmall("needs d > ell >= 1");
    if (n < 2) throw DomainTooSmall("needs n >= 2");
    if ((n - 1) * ell != d * (d - 1))
        throw ParamRelationViolated("(n-1) ell = d (d-1) fails for n=" + std::to_string(n) +
                                    " d=" + std::to_string(d) + " ell=" + std::to_string(ell));
    EllFriendshipBounds out;
    out.theta = theta_ell(n, d, ell);
    out.theta_complement = theta_ell_complement(d, ell);
    const long long dl = d - ell;
    const long long s = isqrt_ll(dl);
    if (s * s == dl) {
        out.bounds.alpha_ub = n * s / (d + s);
        out.bounds.chi_complement_lb = (n * s + d + s - 1) / (d + s);
        out.bounds.omega_ub = 1 + d / s;
        out.bounds.chi_lb = 1 + (d + s - 1) / s;
    } else {
        const double root = std::sqrt(static_cast<double>(dl));
        out.bounds.alpha_ub = detail::floor_nudged(out.theta);
        out.bounds.chi_complement_lb = detail::ceil_nudged(out.theta);
        out.bounds.omega_ub = 1 + detail::floor_nudged(static_cast<double>(d) / root);
        out.bounds.chi_lb = 1 + detail::ceil_nudged(static_cast<double>(d) / root);
    }
    return out;
}

} // namespace srglab
