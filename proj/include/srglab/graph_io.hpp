#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace srglab {

// Edge list: first line is the order n, then one "u v" pair per line,
// 0-based. Blank lines are ignored.
inline Graph from_edge_list(std::istream& in) {
    long long n = -1;
    if (!(in >> n)) throw BadFormat("edge list: missing order line");
    if (n < 1 || n > vertex_cap())
        throw BadFormat("edge list: order " + std::to_string(n) + " out of range");
    GraphBuilder b(static_cast<int>(n));
    long long u, v;
    while (in >> u) {
        if (!(in >> v)) throw BadFormat("edge list: dangling endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadFormat("edge list: endpoint out of range on edge " + std::to_string(u) + " " +
                            std::to_string(v));
        if (u == v) throw BadFormat("edge list: self-loop at " + std::to_string(u));
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw BadFormat("edge list: unreadable content after the edges");
    return b.build();
}

inline Graph from_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return from_edge_list(ss);
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace detail {

inline void g6_append_number(std::string& s, long long n) {
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw TooLarge("graph6 encoding beyond 258047 vertices not supported");
    }
}

inline long long g6_read_number(const std::string& s, size_t& pos) {
    auto byte = [&](size_t i) -> long long {
        if (i >= s.size()) throw BadFormat("graph6: truncated header");
        const long long c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw BadFormat("graph6: byte out of range in header");
        return c - 63;
    };
    if (byte(pos) != 63) return byte(pos++);
    ++pos; // '~'
    if (byte(pos) == 63) throw BadFormat("graph6: 8-byte order form not supported");
    long long n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte(pos++);
    return n;
}

} // namespace detail

// graph6 (printable ASCII): order header, then the upper triangle read
// column by column, six bits per byte, each byte offset by 63.
inline std::string to_graph6(const Graph& g) {
    std::string out;
    detail::g6_append_number(out, g.order());
    int bit = 0;
    unsigned char cur = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) {
            cur = static_cast<unsigned char>(cur << 1);
            if (g.has_edge(i, j)) cur |= 1;
            if (++bit == 6) {
                out.push_back(static_cast<char>(cur + 63));
                bit = 0;
                cur = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>((cur << (6 - bit)) + 63));
    return out;
}

inline Graph from_graph6(std::string line) {
    static const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw BadFormat("graph6: empty input");
    size_t pos = 0;
    const long long n = detail::g6_read_number(line, pos);
    if (n < 1 || n > vertex_cap())
        throw BadFormat("graph6: order " + std::to_string(n) + " out of range");
    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) != nbytes)
        throw BadFormat("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                        std::to_string(line.size() - pos));
    GraphBuilder b(static_cast<int>(n));
    long long bitindex = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bitindex) {
            const long long c = static_cast<unsigned char>(line[pos + bitindex / 6]);
            if (c < 63 || c > 126) throw BadFormat("graph6: data byte out of range");
            if ((c - 63) >> (5 - bitindex % 6) & 1) b.add_edge(i, j);
        }
    return b.build();
}

// Format sniffing: an edge list starts with a decimal digit (codes 48..57,
// below the graph6 range 63..126).
inline Graph read_graph_auto(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw BadFormat("empty graph input");
    if (std::isdigit(static_cast<unsigned char>(text[i]))) return from_edge_list(text);
    std::string line = text.substr(i);
    const size_t nl = line.find('\n');
    if (nl != std::string::npos) line = line.substr(0, nl);
    return from_graph6(line);
}

} // namespace srglab
