#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"

namespace srglab {

// Friendship property: every pair of distinct vertices has exactly one
// common neighbor. Vacuously true below order 2.
inline bool has_friendship_property(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (common_neighbors(g, u, v) != 1) return false;
    return true;
}

// The shared common-neighbor count when one exists across all pairs
// (adjacent and not), e.g. 2 for the rook's graph.
inline std::optional<long long> common_neighbor_constant(const Graph& g) {
    if (g.order() < 2) return std::nullopt;
    long long c = common_neighbors(g, 0, 1);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (common_neighbors(g, u, v) != c) return std::nullopt;
    return c;
}

// Windmill: a universal hub plus a perfect matching on the rest, i.e. a bunch
// of triangles glued at one vertex. K3 counts (one blade).
inline bool is_windmill(const Graph& g) {
    const int n = g.order();
    if (n < 3 || n % 2 == 0) return false;
    int hub = -1;
    for (int u = 0; u < n; ++u)
        if (g.degree(u) == n - 1) {
            hub = u;
            break;
        }
    if (hub < 0) return false;
    for (int u = 0; u < n; ++u)
        if (u != hub && g.degree(u) != 2) return false;
    return true;
}

struct FriendshipScan {
    unsigned long long graphs_scanned = 0;
    std::vector<std::string> satisfying; // graph6, sorted by order then string
    bool all_windmills = false;
};

namespace detail {

// Bits of the scan mask follow the graph6 upper-triangle order, column by
// column, so a surviving mask converts to its graph6 string directly.
inline Graph graph_from_mask(int n, std::uint32_t mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (mask >> bit & 1) b.add_edge(i, j);
    return b.build();
}

inline void scan_range(int n, std::uint32_t lo, std::uint32_t hi,
                       std::vector<std::uint32_t>& survivors) {
    const int nbits = n * (n - 1) / 2;
    std::array<std::pair<int, int>, 21> pairs{};
    {
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) pairs[bit] = {i, j};
    }
    for (std::uint32_t mask = lo; mask < hi; ++mask) {
        std::array<std::uint32_t, 7> row{};
        for (int bit = 0; bit < nbits; ++bit)
            if (mask >> bit & 1) {
                const auto [i, j] = pairs[bit];
                row[i] |= std::uint32_t{1} << j;
                row[j] |= std::uint32_t{1} << i;
            }
        bool ok = true;
        for (int bit = 0; bit < nbits && ok; ++bit) {
            const auto [i, j] = pairs[bit];
            ok = std::popcount(row[i] & row[j]) == 1;
        }
        if (!ok) continue;
        bool isolated = false;
        for (int u = 0; u < n && !isolated; ++u) isolated = row[u] == 0;
        if (!isolated) survivors.push_back(mask);
    }
}

} // namespace detail

// Desk-scale check of the friendship theorem: enumerate every labeled graph
// on 2..max_n vertices, keep those with the friendship property (dropping
// graphs with isolated vertices), and confirm each survivor is a windmill.
// The mask space is split into contiguous ranges when jobs > 1; results are
// merged and sorted, so the output does not depend on the thread count.
inline FriendshipScan verify_friendship_theorem(int max_n, int jobs = 1) {
    if (max_n < 2) throw DomainTooSmall("friendship scan needs max_n >= 2");
    if (max_n > 7)
        throw TooLarge("friendship scan capped at max_n = 7 (2^21 graphs already)");
    if (jobs < 1) throw InvalidParams("jobs must be positive");

    FriendshipScan out;
    std::vector<std::pair<int, std::uint32_t>> survivors;
    for (int n = 2; n <= max_n; ++n) {
        const int nbits = n * (n - 1) / 2;
        const std::uint32_t total = std::uint32_t{1} << nbits;
        out.graphs_scanned += total;
        if (jobs == 1 || total < 4096) {
            std::vector<std::uint32_t> local;
            detail::scan_range(n, 0, total, local);
            for (auto m : local) survivors.emplace_back(n, m);
        } else {
            std::vector<std::vector<std::uint32_t>> locals(jobs);
            std::vector<std::thread> threads;
            for (int t = 0; t < jobs; ++t) {
                const std::uint32_t lo = static_cast<std::uint32_t>(
                    static_cast<unsigned long long>(total) * t / jobs);
                const std::uint32_t hi = static_cast<std::uint32_t>(
                    static_cast<unsigned long long>(total) * (t + 1) / jobs);
                threads.emplace_back(detail::scan_range, n, lo, hi, std::ref(locals[t]));
            }
            for (auto& th : threads) th.join();
            for (const auto& local : locals)
                for (auto m : local) survivors.emplace_back(n, m);
        }
    }
    std::sort(survivors.begin(), survivors.end());
    out.all_windmills = true;
    for (auto [n, mask] : survivors) {
        const Graph g = detail::graph_from_mask(n, mask);
        out.satisfying.push_back(to_graph6(g));
        out.all_windmills = out.all_windmills && is_windmill(g);
    }
    return out;
}

} // namespace srglab
