#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "hatp4/graph.hpp"

namespace hatp4 {

using Mask = std::uint64_t;

inline constexpr int kSmallMaxOrder = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Graph on at most 64 vertices with one adjacency word per vertex. Used by the
/// exhaustive search and verification loops, where the general Graph's
/// allocation per instance would dominate.
struct SmallGraph {
    int n = 0;
    std::array<Mask, kSmallMaxOrder> adj{};

    void add_edge(int u, int v) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1U; }
    Mask vertices() const { return low_bits(n); }

    bool operator==(const SmallGraph& o) const {
        if (n != o.n) return false;
        for (int i = 0; i < n; ++i)
            if (adj[i] != o.adj[i]) return false;
        return true;
    }
};

/// Throws ScaleError when g has more than 64 vertices.
SmallGraph to_small(const Graph& g);
Graph to_graph(const SmallGraph& g);

/// Labelled graph number `code` on n vertices: bit k of `code` is the k-th
/// pair in graph6 column order (0,1),(0,2),(1,2),(0,3),...
SmallGraph graph_from_code(int n, std::uint64_t code);

namespace kernels {

/// Edges of g with both endpoints in `s`.
inline int edges_within(const SmallGraph& g, Mask s) {
    int twice = 0;
    for (Mask x = s; x; x &= x - 1) twice += std::popcount(g.adj[std::countr_zero(x)] & s);
    return twice / 2;
}

inline int edge_count(const SmallGraph& g) { return edges_within(g, g.vertices()); }

/// Triangles inside `s`.
inline int triangles_within(const SmallGraph& g, Mask s) {
    int c = 0;
    for (Mask x = s; x; x &= x - 1) {
        const int a = std::countr_zero(x);
        const Mask na = g.adj[a] & s & ~low_bits(a + 1);
        for (Mask y = na; y; y &= y - 1) {
            const int b = std::countr_zero(y);
            c += std::popcount(na & g.adj[b] & ~low_bits(b + 1));
        }
    }
    return c;
}

inline int triangle_count(const SmallGraph& g) { return triangles_within(g, g.vertices()); }

/// True iff G[s] contains a triangle.
inline bool has_triangle_within(const SmallGraph& g, Mask s) {
    for (Mask x = s; x; x &= x - 1) {
        const int a = std::countr_zero(x);
        const Mask na = g.adj[a] & s;
        for (Mask y = na; y; y &= y - 1)
            if (na & g.adj[std::countr_zero(y)]) return true;
    }
    return false;
}

/// True iff G[s] contains a path on four vertices (as a subgraph): some edge xy
/// with a in N(x)\{y}, b in N(y)\{x}, a != b.
inline bool has_p4_within(const SmallGraph& g, Mask s) {
    for (Mask xs = s; xs; xs &= xs - 1) {
        const int x = std::countr_zero(xs);
        const Mask nx = g.adj[x] & s;
        if (std::popcount(nx) < 2) continue;
        for (Mask ys = nx & ~low_bits(x + 1); ys; ys &= ys - 1) {
            const int y = std::countr_zero(ys);
            const Mask a = nx & ~bit(y);
            const Mask b = g.adj[y] & s & ~bit(x);
            if (a && b && std::popcount(a | b) >= 2) return true;
        }
    }
    return false;
}

/// True iff some vertex of `apexes` has a P4 in its neighbourhood.
inline bool has_p4hat_at(const SmallGraph& g, Mask apexes) {
    for (Mask x = apexes; x; x &= x - 1)
        if (has_p4_within(g, g.adj[std::countr_zero(x)])) return true;
    return false;
}

inline bool is_p4hat_free(const SmallGraph& g) { return !has_p4hat_at(g, g.vertices()); }

inline bool is_k4_free(const SmallGraph& g) {
    for (int u = 0; u < g.n; ++u)
        if (has_triangle_within(g, g.adj[u] & ~low_bits(u + 1))) return false;
    return true;
}

/// For a graph h whose subgraph h - v is P4-hat-free: whether h is P4-hat-free.
/// Any copy must use v, either as apex (a P4 inside N(v)) or inside the
/// neighbourhood of a neighbour of v.
inline bool vertex_keeps_p4hat_free(const SmallGraph& h, int v) {
    const Mask s = h.adj[v];
    if (has_p4_within(h, s)) return false;
    return !has_p4hat_at(h, s);
}

/// For a graph h whose subgraph h - v is K4-free: whether h is K4-free.
inline bool vertex_keeps_k4_free(const SmallGraph& h, int v) { return !has_triangle_within(h, h.adj[v]); }

/// For a graph h whose subgraph h - uv is P4-hat-free: whether h is P4-hat-free.
/// A new copy must use uv, so its apex is u, v or a common neighbour.
inline bool edge_keeps_p4hat_free(const SmallGraph& h, int u, int v) {
    return !has_p4hat_at(h, bit(u) | bit(v) | (h.adj[u] & h.adj[v]));
}

}  // namespace kernels

}  // namespace hatp4
