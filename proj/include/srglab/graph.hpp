#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "srg_params.hpp"

namespace srglab {

inline constexpr int kDefaultVertexCap = 5000;

// Vertex cap for graph-producing operations. SRGLAB_VERTEX_CAP overrides the
// default, so desk experiments can raise it without a rebuild.
inline int vertex_cap() {
    if (const char* env = std::getenv("SRGLAB_VERTEX_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return kDefaultVertexCap;
}

// Simple undirected graph on vertices 0..n-1, adjacency stored as packed
// 64-bit rows so common-neighbor counts are popcounts. Immutable once built.
class Graph {
public:
    explicit Graph(int n)
        : n_(checked_order(n)), words_((n + 63) / 64), bits_(static_cast<size_t>(n_) * words_, 0) {}

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (row(v)[u >> 6] >> (u & 63)) & 1u;
    }

    int degree(int u) const {
        check_vertex(u);
        int s = 0;
        const std::uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) s += std::popcount(r[w]);
        return s;
    }

    long long edge_count() const {
        long long s = 0;
        for (int u = 0; u < n_; ++u) s += degree(u);
        return s / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (test_bit(u, v)) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

    friend class GraphBuilder;

private:
    static int checked_order(int n) {
        if (n < 1) throw DomainTooSmall("graph order must be at least 1");
        return n;
    }

    void check_vertex(int u) const {
        if (u < 0 || u >= n_)
            throw OutOfRange("vertex " + std::to_string(u) + " not in [0," + std::to_string(n_) + ")");
    }

    bool test_bit(int u, int v) const { return (row(v)[u >> 6] >> (u & 63)) & 1u; }

    void set_edge(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    GraphBuilder& add_edge(int u, int v) {
        g_.check_vertex(u);
        g_.check_vertex(v);
        if (u == v) throw SameVertex("self-loop at vertex " + std::to_string(u));
        g_.set_edge(u, v);
        return *this;
    }

    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edge_list) {
    GraphBuilder b(n);
    for (auto [u, v] : edge_list) b.add_edge(u, v);
    return b.build();
}

inline Graph complement(const Graph& g) {
    const int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) b.add_edge(u, v);
    return b.build();
}

// Subgraph induced by verts, relabeled 0..k-1 in list order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    std::vector<bool> seen(g.order(), false);
    for (int v : verts) {
        if (v < 0 || v >= g.order()) throw OutOfRange("vertex " + std::to_string(v));
        if (seen[v]) throw SameVertex("vertex " + std::to_string(v) + " listed twice");
        seen[v] = true;
    }
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(verts[i], verts[j])) b.add_edge(i, j);
    return b.build();
}

inline Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw EmptyEdgeSet("no edge " + std::to_string(u) + "-" + std::to_string(v) + " to remove");
    GraphBuilder b(g.order());
    for (auto [a, c] : g.edges())
        if (!((a == u && c == v) || (a == v && c == u))) b.add_edge(a, c);
    return b.build();
}

inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const long long n = static_cast<long long>(g.order()) * h.order();
    if (n > vertex_cap())
        throw TooLarge("cartesian product has " + std::to_string(n) + " vertices, cap is " +
                       std::to_string(vertex_cap()));
    const int hn = h.order();
    GraphBuilder b(static_cast<int>(n));
    auto id = [hn](int i, int j) { return i * hn + j; };
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < hn; ++j) {
            for (int j2 = j + 1; j2 < hn; ++j2)
                if (h.has_edge(j, j2)) b.add_edge(id(i, j), id(i, j2));
            for (int i2 = i + 1; i2 < g.order(); ++i2)
                if (g.has_edge(i, i2)) b.add_edge(id(i, j), id(i2, j));
        }
    return b.build();
}

// Vertices of the line graph are the edges of g in lexicographic order;
// two are adjacent when the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    const auto es = g.edges();
    if (es.empty()) throw EmptyEdgeSet("line graph of an edgeless graph");
    if (static_cast<long long>(es.size()) > vertex_cap())
        throw TooLarge("line graph has " + std::to_string(es.size()) + " vertices, cap is " +
                       std::to_string(vertex_cap()));
    GraphBuilder b(static_cast<int>(es.size()));
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            const auto [a, b1] = es[i];
            const auto [c, d] = es[j];
            if (a == c || a == d || b1 == c || b1 == d) b.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return b.build();
}

inline int common_neighbors(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw OutOfRange("common_neighbors: vertex out of range");
    if (u == v) throw SameVertex("common_neighbors of a vertex with itself");
    const std::uint64_t* ru = g.row(u);
    const std::uint64_t* rv = g.row(v);
    int s = 0;
    for (int w = 0; w < g.words_per_row(); ++w) s += std::popcount(ru[w] & rv[w]);
    return s;
}

// Definitional strongly-regular scan. Complete and empty graphs are excluded
// (their lambda or mu is undefined); disconnected unions of equal complete
// graphs come out as (mr, r-1, r-2, 0).
inline std::optional<SrgParams> detect_srg(const Graph& g) {
    const int n = g.order();
    if (n < 2) return std::nullopt;
    const int d = g.degree(0);
    for (int u = 1; u < n; ++u)
        if (g.degree(u) != d) return std::nullopt;
    if (d == 0 || d == n - 1) return std::nullopt;
    int lam = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int c = common_neighbors(g, u, v);
            int& slot = g.has_edge(u, v) ? lam : mu;
            if (slot < 0)
                slot = c;
            else if (slot != c)
                return std::nullopt;
        }
    // d in (0, n-1) guarantees both an edge and a non-edge exist
    return SrgParams{n, d, lam, mu};
}

inline long long triangle_count(const Graph& g) {
    long long s = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) s += common_neighbors(g, u, v);
    return s / 3;
}

// C4-free means no pair of vertices has two common neighbors.
inline bool is_c4_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (common_neighbors(g, u, v) >= 2) return false;
    return true;
}

// Extremal edge count of a C4-free graph on n vertices:
// floor( n (1 + sqrt(4n-3)) / 4 ), exact when 4n-3 is a perfect square.
inline long long c4_size_bound(long long n) {
    if (n < 1) throw DomainTooSmall("c4_size_bound needs n >= 1");
    const long long disc = 4 * n - 3;
    const long long s = isqrt_ll(disc);
    if (s * s == disc) return n * (1 + s) / 4;
    const double val = static_cast<double>(n) * (1.0 + std::sqrt(static_cast<double>(disc))) / 4.0;
    return static_cast<long long>(std::floor(val + 1e-9));
}

} // namespace srglab
