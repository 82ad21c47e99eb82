#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "prime_field.hpp"

namespace srglab {

namespace detail {
inline void check_cap(long long n, const char* what) {
    if (n > vertex_cap())
        throw TooLarge(std::string(what) + " would have " + std::to_string(n) +
                       " vertices, cap is " + std::to_string(vertex_cap()));
}
} // namespace detail

// Kneser-style description: vertices are the 2-subsets of {0..4}, adjacent
// when disjoint. Outer 5-cycle + pentagram + spokes would do equally well.
inline Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    GraphBuilder b(10);
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            const auto [a1, a2] = pairs[i];
            const auto [b1, b2] = pairs[j];
            if (a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2)
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return b.build();
}

// Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
// srg(16,6,2,2) with clique number 3, the non-rook twin.
inline Graph shrikhande() {
    GraphBuilder b(16);
    const std::array<std::pair<int, int>, 6> conn{{{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}}};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (auto [dx, dy] : conn) {
                const int u = x * 4 + y;
                const int v = ((x + dx) % 4) * 4 + (y + dy) % 4;
                if (u < v) b.add_edge(u, v);
            }
    return b.build();
}

inline Graph complete_graph(int n) {
    detail::check_cap(n, "complete graph");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

inline Graph cycle(int len) {
    if (len < 3) throw DomainTooSmall("cycle needs length >= 3");
    detail::check_cap(len, "cycle");
    GraphBuilder b(len);
    for (int u = 0; u < len; ++u) b.add_edge(u, (u + 1) % len);
    return b.build();
}

inline Graph path(int n) {
    detail::check_cap(n, "path");
    GraphBuilder b(n);
    for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
    return b.build();
}

// b triangles glued at a central vertex (vertex 0): the friendship graphs.
inline Graph windmill(int blades) {
    if (blades < 1) throw DomainTooSmall("windmill needs at least one triangle");
    const long long n = 2LL * blades + 1;
    detail::check_cap(n, "windmill");
    GraphBuilder g(static_cast<int>(n));
    for (int k = 0; k < blades; ++k) {
        const int u = 1 + 2 * k, v = 2 + 2 * k;
        g.add_edge(0, u);
        g.add_edge(0, v);
        g.add_edge(u, v);
    }
    return g.build();
}

// Triangular graph T_l = line graph of K_l: srg(l(l-1)/2, 2(l-2), l-2, 4).
inline Graph triangular(int l) {
    if (l < 4) throw DomainTooSmall("triangular graph needs l >= 4");
    detail::check_cap(static_cast<long long>(l) * (l - 1) / 2, "triangular graph");
    return line_graph(complete_graph(l));
}

inline Graph rook_4x4() { return cartesian_product(complete_graph(4), complete_graph(4)); }

// Symplectic polar graph Sp(2n, q), q prime: vertices are the projective
// points of F_q^{2n} (canonical representative scaled so the first nonzero
// coordinate is 1, listed in lexicographic order), adjacent when the standard
// alternating form sum_i (x_{2i} y_{2i+1} - x_{2i+1} y_{2i}) vanishes.
inline Graph symplectic_polar(int n, long long q) {
    if (n < 2) throw DomainTooSmall("symplectic polar graph needs n >= 2");
    if (!is_prime(q)) throw NotPrime("field order " + std::to_string(q) + " is not prime");
    const int dim = 2 * n;
    // v = 1 + q + ... + q^(dim-1), summed incrementally to dodge overflow
    long long v = 0, pw = 1;
    bool over = false;
    for (int k = 0; k < dim; ++k) {
        if (pw > (1LL << 40)) { over = true; break; }
        v += pw;
        pw *= q;
    }
    if (over || v > vertex_cap())
        throw TooLarge("symplectic polar graph exceeds the vertex cap of " +
                       std::to_string(vertex_cap()));

    // canonical projective points: leading coordinate 1, later entries free
    std::vector<std::vector<int>> pts;
    pts.reserve(static_cast<size_t>(v));
    for (int lead = 0; lead < dim; ++lead) {
        const int free = dim - lead - 1;
        long long count = 1;
        for (int k = 0; k < free; ++k) count *= q;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> x(dim, 0);
            x[lead] = 1;
            long long c = code;
            for (int k = dim - 1; k > lead; --k) {
                x[k] = static_cast<int>(c % q);
                c /= q;
            }
            pts.push_back(std::move(x));
        }
    }
    std::sort(pts.begin(), pts.end());

    GraphBuilder b(static_cast<int>(pts.size()));
    auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
        long long s = 0;
        for (int i = 0; i < n; ++i) {
            s += static_cast<long long>(x[2 * i]) * y[2 * i + 1] -
                 static_cast<long long>(x[2 * i + 1]) * y[2 * i];
        }
        s %= q;
        return s < 0 ? s + q : s;
    };
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (form(pts[i], pts[j]) == 0) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

namespace detail {
// q^(2n-2) with an overflow guard; the closed forms need q^2n < 2^62.
inline long long symplectic_power(int n, long long q) {
    if (n < 2) throw DomainTooSmall("symplectic polar graph needs n >= 2");
    if (!is_prime(q)) throw NotPrime("field order " + std::to_string(q) + " is not prime");
    long long p = 1;
    for (int k = 0; k < 2 * n - 2; ++k) {
        if (p > (1LL << 62) / (q * q * q)) throw TooLarge("symplectic parameters overflow");
        p *= q;
    }
    return p;
}
} // namespace detail

// Closed-form parameter tuples for the symplectic family and its complement.
inline SrgParams symplectic_polar_params(int n, long long q) {
    const long long q2n2 = detail::symplectic_power(n, q);
    const long long ratio = (q2n2 - 1) / (q - 1);
    const long long v = (q2n2 * q * q - 1) / (q - 1);
    return SrgParams{v, q * ratio, ratio - 2, ratio};
}

inline SrgParams symplectic_complement_params(int n, long long q) {
    const long long q2n2 = detail::symplectic_power(n, q);
    const long long v = (q2n2 * q * q - 1) / (q - 1);
    return SrgParams{v, q2n2 * q, q2n2 * (q - 1), q2n2 * (q - 1)};
}

} // namespace srglab
