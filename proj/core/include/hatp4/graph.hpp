#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hatp4 {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);

    auto operator<=>(const Edge&) const = default;
};

/// Vertex set of a K3, stored sorted.
struct Triangle {
    std::array<Vertex, 3> v{};

    Triangle() = default;
    Triangle(Vertex a, Vertex b, Vertex c);

    auto operator<=>(const Triangle&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Every adjacency row is a bitset of `words_per_row()` 64-bit words, so graphs
/// with n <= 64 use a single word per vertex and the neighbourhood
/// intersections in triangle counting reduce to one AND + popcount.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    std::span<const std::uint64_t> row(Vertex u) const {
        return {bits_.data() + static_cast<std::size_t>(u) * stride_, stride_};
    }

    int degree(Vertex u) const;
    std::vector<Vertex> neighbors(Vertex u) const;
    std::size_t edge_count() const;
    /// Edges in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;

    void check_vertex(Vertex u) const;
};

/// Every triangle exactly once, in lexicographic order.
std::vector<Triangle> triangles(const Graph& g);

/// Number of triangles, computed as one third of the sum over edges of the
/// common-neighbourhood sizes (the list is never materialized).
std::uint64_t triangle_count(const Graph& g);

/// Number of triangles containing `e`. Throws PreconditionError if `e` is not
/// an edge of `g`.
int edge_triangle_multiplicity(const Graph& g, const Edge& e);

/// Subgraph induced on `s`, relabelled 0..|s|-1 in increasing order of the
/// original indices. Duplicates in `s` are ignored.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Number of triangles that contain `v` (= edges inside N(v)).
int triangles_at(const Graph& g, Vertex v);

// Bitset helpers shared by the modules.

inline int popcount(std::span<const std::uint64_t> a) {
    int c = 0;
    for (auto w : a) c += std::popcount(w);
    return c;
}

inline int and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

inline bool test_bit(std::span<const std::uint64_t> a, int i) {
    return (a[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U;
}

/// Calls f(i) for every set bit i of a word-array bitset, in increasing order.
template <typename F>
void for_each_bit(std::span<const std::uint64_t> a, F&& f) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t x = a[w];
        while (x) {
            f(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
            x &= x - 1;
        }
    }
}

/// Calls f(i) for every set bit of a single word.
template <typename F>
void for_each_bit(std::uint64_t x, F&& f) {
    while (x) {
        f(std::countr_zero(x));
        x &= x - 1;
    }
}

}  // namespace hatp4
